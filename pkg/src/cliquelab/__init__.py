"""Clique graphs, their iterates, and mechanical checks of claims about joins and products.

Graphs are immutable :class:`Graph` objects on vertices ``0..n-1``.  The hot
kernels (maximal-clique enumeration and canonical labeling) come from a
compiled extension when it is available and from a pure-Python module
otherwise; ``cliquelab.BACKEND`` names the one in use.
"""

from __future__ import annotations

from ._backend import BACKEND, available_backends
from .canon import (
    CanonicalCode,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    corpus,
    generate_nonisomorphic,
    is_isomorphic,
)
from .cliques import (
    CliqueFamily,
    Decision,
    HellyResult,
    clique_graph,
    enumerate_cliques,
    helly_brute_oracle,
    intersection_graph,
    is_clique_helly,
    join_clique_grid,
)
from .dynamics import BoundExceeded, Bounds, Converged, classify, is_k_root, iterate_k, k_periodicity
from .errors import (
    CanonicalLimitExceeded,
    CliqueLabError,
    CliqueLimitExceeded,
    Graph6Error,
    GraphError,
    JoinStructureError,
)
from .formats import emit_dot, emit_graph6, parse_graph6, read_graph6_file, write_graph6_file
from .graph import (
    Graph,
    cartesian_product,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    has_universal_vertex,
    induced_subgraph,
    is_complete,
    is_connected,
    join,
    new_graph,
    path,
    standard_family,
    star,
)
from .predicates import find_hamiltonian_cycle, is_eulerian, is_hamiltonian, is_planar

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "available_backends",
    "BoundExceeded",
    "Bounds",
    "CanonicalCode",
    "CanonicalLimitExceeded",
    "CliqueFamily",
    "CliqueLabError",
    "CliqueLimitExceeded",
    "Converged",
    "Decision",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HellyResult",
    "JoinStructureError",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "cartesian_product",
    "classify",
    "clique_graph",
    "complement",
    "complete",
    "corpus",
    "cycle",
    "disjoint_union",
    "emit_dot",
    "emit_graph6",
    "empty",
    "enumerate_cliques",
    "find_hamiltonian_cycle",
    "generate_nonisomorphic",
    "has_universal_vertex",
    "helly_brute_oracle",
    "induced_subgraph",
    "intersection_graph",
    "is_clique_helly",
    "is_complete",
    "is_connected",
    "is_eulerian",
    "is_hamiltonian",
    "is_isomorphic",
    "is_k_root",
    "is_planar",
    "iterate_k",
    "join",
    "join_clique_grid",
    "k_periodicity",
    "new_graph",
    "parse_graph6",
    "path",
    "read_graph6_file",
    "standard_family",
    "star",
    "write_graph6_file",
]
