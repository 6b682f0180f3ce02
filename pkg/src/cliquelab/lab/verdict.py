"""Verdicts, conjecture tags and run configuration for the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..cliques import DEFAULT_HELLY_CAP
from ..dynamics import Bounds
from ..formats import emit_graph6
from ..graph import Graph
from ..predicates import DEFAULT_HAMILTON_BUDGET, DEFAULT_PLANAR_BUDGET, DEFAULT_PLANAR_ORDER_CAP

__all__ = ["ConjectureId", "Outcome", "Verdict", "CheckConfig", "exit_code"]


class ConjectureId(str, Enum):
    JOIN_CLIQUES = "JOIN-CLIQUES"
    JOIN_COUNT = "JOIN-COUNT"
    COMPLETE_IFF = "COMPLETE-IFF"
    CLIQUE_TRANSFER = "CLIQUE-TRANSFER"
    CLIQUE_INVENTORY = "CLIQUE-INVENTORY"
    K2_JOIN = "K2-JOIN"
    CONV_IFF = "CONV-IFF"
    CONV_COMPLETE = "CONV-COMPLETE"
    PERIODIC_JOIN = "PERIODIC-JOIN"
    OBS_HAMILTONIAN = "OBS-HAMILTONIAN"
    OBS_PLANAR = "OBS-PLANAR"
    OBS_DEGREE = "OBS-DEGREE"
    OBS_EULERIAN = "OBS-EULERIAN"
    PRODUCT_K2 = "PRODUCT-K2"
    PRODUCT_COROLLARY = "PRODUCT-COROLLARY"

    @property
    def kind(self) -> str:
        return "cartesian" if self.value.startswith("PRODUCT") else "join"


class Outcome(str, Enum):
    HOLDS = "holds"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "precondition-skipped"


@dataclass(frozen=True)
class CheckConfig:
    bounds: Bounds = Bounds()
    helly_cap: int = DEFAULT_HELLY_CAP
    hamilton_budget: int = DEFAULT_HAMILTON_BUDGET
    planar_order_cap: int = DEFAULT_PLANAR_ORDER_CAP
    planar_budget: int = DEFAULT_PLANAR_BUDGET


@dataclass
class Verdict:
    conjecture: ConjectureId
    outcome: Outcome
    g1: Graph
    g2: Graph | None
    kind: str
    witness: dict | None = None
    reason: str | None = None
    measured: dict = field(default_factory=dict)
    runtime_ms: float | None = None

    def to_dict(self, timestamps: bool = True) -> dict:
        out = {
            "conjecture": self.conjecture.value,
            "instance": {
                "g1": emit_graph6(self.g1).decode("ascii"),
                "g2": emit_graph6(self.g2).decode("ascii") if self.g2 is not None else None,
                "kind": self.kind,
            },
            "outcome": self.outcome.value,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        out["measured"] = self.measured
        if timestamps and self.runtime_ms is not None:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def exit_code(outcomes) -> int:
    """0 when everything held or was skipped, 2 on any refutation, else 3."""
    seen = set(outcomes)
    if Outcome.REFUTED in seen:
        return 2
    if Outcome.INCONCLUSIVE in seen:
        return 3
    return 0
