"""Bounded iteration of the clique operator and convergence classification.

Divergence is never claimed: when an iterate outgrows the bounds the result
is :class:`BoundExceeded`, which only says "not seen to converge".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .canon import CanonicalCode, canonical_form, cheap_invariant, is_isomorphic
from .cliques import clique_graph
from .errors import CanonicalLimitExceeded, CliqueLimitExceeded
from .graph import Graph

__all__ = [
    "Bounds",
    "IterationStep",
    "IterationTrace",
    "Converged",
    "BoundExceeded",
    "Classification",
    "BoundTripped",
    "iterate_k",
    "classify",
    "k_periodicity",
    "is_k_root",
    "kth_iterate",
    "EAGER_CODE_ORDER",
]

# steps up to this order always get a canonical code; larger ones only when
# an earlier step shares their cheap invariant
EAGER_CODE_ORDER = 64


@dataclass(frozen=True)
class Bounds:
    max_steps: int = 12
    max_vertices: int = 512
    max_cliques: int = 100_000

    def __post_init__(self) -> None:
        for name in ("max_steps", "max_vertices", "max_cliques"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def clique_limit(self) -> int:
        return min(self.max_cliques, self.max_vertices)

    def overflow_reason(self) -> str:
        # the enumeration stops at clique_limit; whichever bound that is trips
        return "clique_bound" if self.max_cliques <= self.max_vertices else "vertex_bound"


@dataclass
class IterationStep:
    index: int
    vertex_count: int
    clique_count: int | None = None
    code: CanonicalCode | None = None
    graph: Graph | None = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "vertices": self.vertex_count,
            "cliques": self.clique_count,
            "code_hash": self.code.hexdigest() if self.code is not None else None,
        }


@dataclass
class IterationTrace:
    steps: list[IterationStep]
    # exactly one of these is set
    repeat_of: int | None = None
    reason: str | None = None

    @property
    def vertex_counts(self) -> list[int]:
        return [s.vertex_count for s in self.steps]


@dataclass(frozen=True)
class Converged:
    """``K^t(G)`` is isomorphic to ``K^(t+p)(G)``, first repeat seen."""

    preperiod: int
    period: int
    trace: IterationTrace = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {"outcome": "converged", "preperiod": self.preperiod, "period": self.period,
                "trace": [s.to_dict() for s in self.trace.steps]}


@dataclass(frozen=True)
class BoundExceeded:
    last_index: int
    reason: str
    trace: IterationTrace = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {"outcome": "bound_exceeded", "last_index": self.last_index, "reason": self.reason,
                "trace": [s.to_dict() for s in self.trace.steps]}


Classification = Union[Converged, BoundExceeded]


def _code(step: IterationStep) -> CanonicalCode:
    if step.code is None:
        step.code = canonical_form(step.graph)
    return step.code


def iterate_k(g: Graph, bounds: Bounds = Bounds(), keep_graphs: bool = True) -> IterationTrace:
    """Apply ``K`` until an iterate repeats up to isomorphism or a bound trips."""
    steps: list[IterationStep] = []
    by_invariant: dict[tuple, list[int]] = {}
    current = g
    t = 0
    while True:
        step = IterationStep(t, current.order, graph=current)
        steps.append(step)
        inv = cheap_invariant(current)
        earlier = by_invariant.setdefault(inv, [])
        try:
            if earlier or current.order <= EAGER_CODE_ORDER:
                code = _code(step)
                for s in earlier:
                    if _code(steps[s]) == code:
                        return _finish(steps, keep_graphs, repeat_of=s)
        except CanonicalLimitExceeded:
            if earlier:
                return _finish(steps, keep_graphs, reason="canonical_bound")
        earlier.append(t)
        if t >= bounds.max_steps:
            return _finish(steps, keep_graphs, reason="step_bound")
        try:
            nxt, family = clique_graph(current, cap=bounds.clique_limit)
        except CliqueLimitExceeded:
            return _finish(steps, keep_graphs, reason=bounds.overflow_reason())
        step.clique_count = len(family)
        current = nxt
        t += 1


def _finish(steps, keep_graphs, **kwargs) -> IterationTrace:
    if not keep_graphs:
        for s in steps:
            s.graph = None
    return IterationTrace(steps, **kwargs)


def classify(g: Graph, bounds: Bounds = Bounds()) -> Classification:
    trace = iterate_k(g, bounds)
    if trace.repeat_of is not None:
        last = trace.steps[-1].index
        return Converged(trace.repeat_of, last - trace.repeat_of, trace)
    return BoundExceeded(trace.steps[-1].index, trace.reason, trace)


def k_periodicity(g: Graph, bounds: Bounds = Bounds()) -> int | None:
    """Least ``p >= 1`` with ``K^p(g)`` isomorphic to ``g``, if seen within bounds."""
    c = classify(g, bounds)
    if isinstance(c, Converged) and c.preperiod == 0:
        return c.period
    return None


def is_k_root(h: Graph, g: Graph) -> bool:
    return is_isomorphic(clique_graph(h)[0], g)


class BoundTripped(Exception):
    def __init__(self, reason: str, index: int, orders: list[int]) -> None:
        super().__init__(f"{reason} before iterate {index + 1} (orders so far {orders})")
        self.reason = reason
        self.index = index
        self.orders = orders


def kth_iterate(g: Graph, k: int, bounds: Bounds = Bounds()) -> tuple[Graph, list[int]]:
    """``K^k(g)`` and the orders of ``K^0 .. K^k``; raises :class:`BoundTripped`."""
    orders = [g.order]
    current = g
    for i in range(k):
        try:
            current, _ = clique_graph(current, cap=bounds.clique_limit)
        except CliqueLimitExceeded:
            raise BoundTripped(bounds.overflow_reason(), i, orders) from None
        orders.append(current.order)
    return current, orders
