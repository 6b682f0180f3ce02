"""Maximal cliques, the clique-graph operator and the Clique-Helly property."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from ._backend import kernels as _kernels
from .errors import GraphError, JoinStructureError
from .graph import Graph, join

__all__ = [
    "Decision",
    "CliqueFamily",
    "DEFAULT_CLIQUE_CAP",
    "DEFAULT_HELLY_CAP",
    "enumerate_cliques",
    "clique_graph",
    "intersection_graph",
    "JoinCliqueGrid",
    "join_clique_grid",
    "HellyResult",
    "is_clique_helly",
    "helly_brute_oracle",
    "default_clique_cap",
]

DEFAULT_HELLY_CAP = 64
BRUTE_HELLY_CAP = 16


def default_clique_cap() -> int:
    value = os.environ.get("CLIQUELAB_MAX_CLIQUES")
    return int(value) if value else 1_000_000


DEFAULT_CLIQUE_CAP = default_clique_cap()


class Decision(str, Enum):
    """Outcome of a bounded search: decided either way, or out of budget."""

    TRUE = "true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"

    @classmethod
    def of(cls, value: bool) -> "Decision":
        return cls.TRUE if value else cls.FALSE


@dataclass(frozen=True)
class CliqueFamily:
    """The maximal cliques of ``graph``, sorted by their vertex lists."""

    graph: Graph
    cliques: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.cliques[i]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in c) for c in self.cliques)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {c: i for i, c in enumerate(self.cliques)}


def enumerate_cliques(g: Graph, cap: int | None = None) -> CliqueFamily:
    """Every maximal clique of ``g`` exactly once.

    Raises :class:`~cliquelab.errors.CliqueLimitExceeded` once more than
    ``cap`` cliques have been found.
    """
    if cap is None:
        cap = DEFAULT_CLIQUE_CAP
    found = _kernels.maximal_cliques(g.order, g.rows, cap)
    return CliqueFamily(g, tuple(sorted(found)))


def intersection_graph(n_vertices: int, family) -> Graph:
    return Graph(len(family), _kernels.intersection_rows(n_vertices, family))


def clique_graph(g: Graph, cap: int | None = None) -> tuple[Graph, CliqueFamily]:
    """``K(g)``: vertex ``i`` is clique ``i`` of the returned family."""
    fam = enumerate_cliques(g, cap)
    return intersection_graph(g.order, fam.cliques), fam


@dataclass(frozen=True)
class JoinCliqueGrid:
    """Clique ``cells[i][j]`` of the join is clique ``i`` of g1 plus clique ``j`` of g2."""

    family1: CliqueFamily
    family2: CliqueFamily
    family: CliqueFamily
    cells: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.family1)

    @property
    def cols(self) -> int:
        return len(self.family2)

    def cell(self, i: int, j: int) -> int:
        return self.cells[i][j]

    @cached_property
    def position(self) -> dict[int, tuple[int, int]]:
        return {c: (i, j) for i, row in enumerate(self.cells) for j, c in enumerate(row)}

    def row_block(self, rows) -> frozenset[int]:
        return frozenset(self.cells[i][j] for i in rows for j in range(self.cols))

    def column_block(self, cols) -> frozenset[int]:
        return frozenset(self.cells[i][j] for i in range(self.rows) for j in cols)


def join_clique_grid(g1: Graph, g2: Graph, cap: int | None = None) -> JoinCliqueGrid:
    """Locate every union ``X_i + Y_j`` inside the clique family of ``g1 + g2``.

    Raises :class:`JoinStructureError` (with a witness) when some join clique
    is not such a union or some union is not a join clique.
    """
    f1 = enumerate_cliques(g1, cap)
    f2 = enumerate_cliques(g2, cap)
    fj = enumerate_cliques(join(g1, g2), cap)
    n1 = g1.order
    cells = [[-1] * len(f2) for _ in range(len(f1))]
    for idx, q in enumerate(fj.cliques):
        x = tuple(v for v in q if v < n1)
        y = tuple(v - n1 for v in q if v >= n1)
        i = f1.index.get(x)
        j = f2.index.get(y)
        if i is None or j is None:
            raise JoinStructureError(
                f"join clique {list(q)} is not a union of factor cliques",
                {"clique": list(q), "part_g1": list(x), "part_g2": list(y)},
            )
        cells[i][j] = idx
    for i, row in enumerate(cells):
        for j, c in enumerate(row):
            if c < 0:
                union = list(f1[i]) + [v + n1 for v in f2[j]]
                raise JoinStructureError(
                    f"union of g1 clique {i} and g2 clique {j} is not a join clique",
                    {"missing_union": union, "cell": [i, j]},
                )
    return JoinCliqueGrid(f1, f2, fj, tuple(tuple(r) for r in cells))


@dataclass(frozen=True)
class HellyResult:
    decision: Decision
    family: CliqueFamily
    # witness: a maximal pairwise-intersecting subfamily with empty total
    # intersection; core: an inclusion-minimal subset of it with the same defect
    witness: tuple[int, ...] | None = None
    core: tuple[int, ...] | None = None
    reason: str | None = field(default=None)

    def __bool__(self) -> bool:
        return self.decision is Decision.TRUE


def _total_intersection(masks, members) -> int:
    acc = -1
    for i in members:
        acc &= masks[i]
    return acc


def is_clique_helly(g: Graph, family_cap: int = DEFAULT_HELLY_CAP) -> HellyResult:
    """Decide whether every pairwise-intersecting set of cliques shares a vertex.

    Every pairwise-intersecting subfamily sits inside a maximal one (a clique
    of ``K(g)``) and shrinking a family can only grow its intersection, so it
    suffices to inspect the cliques of ``K(g)``.
    """
    if family_cap <= 0:
        raise GraphError("family_cap must be positive")
    fam = enumerate_cliques(g)
    if len(fam) > family_cap:
        return HellyResult(Decision.INCONCLUSIVE, fam,
                           reason=f"{len(fam)} cliques exceed the Helly cap {family_cap}")
    kg = intersection_graph(g.order, fam.cliques)
    masks = fam.masks
    for subfamily in enumerate_cliques(kg).cliques:
        if _total_intersection(masks, subfamily) == 0:
            core = list(subfamily)
            for i in subfamily:
                trial = [c for c in core if c != i]
                if _total_intersection(masks, trial) == 0:
                    core = trial
            return HellyResult(Decision.FALSE, fam, tuple(subfamily), tuple(core))
    return HellyResult(Decision.TRUE, fam)


def helly_brute_oracle(g: Graph) -> bool:
    """Check all ``2**k`` subfamilies of the ``k`` cliques directly (``k <= 16``)."""
    fam = enumerate_cliques(g)
    k = len(fam)
    if k > BRUTE_HELLY_CAP:
        raise GraphError(f"brute-force Helly oracle limited to {BRUTE_HELLY_CAP} cliques, got {k}")
    masks = fam.masks
    for subset in range(1, 1 << k):
        members = [i for i in range(k) if subset >> i & 1]
        pairwise = all(masks[a] & masks[b] for a in members for b in members)
        if not pairwise:
            continue
        common = (1 << g.order) - 1
        for i in members:
            common &= masks[i]
        if common == 0:
            return False
    return True
