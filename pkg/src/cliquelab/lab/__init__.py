"""Executable checkers for claims about clique graphs of joins and products."""

from __future__ import annotations

from .checkers import (
    OBSERVATIONS,
    check,
    check_clique_inventory,
    check_clique_transfer,
    check_complete_iff,
    check_convergence_join,
    check_join_cliques,
    check_join_observation,
    check_k2_join,
    check_periodic_join,
    check_product_k2,
)
from .sweep import CorpusSpec, RandomPairs, SweepReport, load_corpus, random_graph, sweep
from .verdict import CheckConfig, ConjectureId, Outcome, Verdict, exit_code

__all__ = [
    "OBSERVATIONS",
    "CheckConfig",
    "ConjectureId",
    "CorpusSpec",
    "RandomPairs",
    "Outcome",
    "SweepReport",
    "Verdict",
    "check",
    "check_clique_inventory",
    "check_clique_transfer",
    "check_complete_iff",
    "check_convergence_join",
    "check_join_cliques",
    "check_join_observation",
    "check_k2_join",
    "check_periodic_join",
    "check_product_k2",
    "exit_code",
    "load_corpus",
    "random_graph",
    "sweep",
]
