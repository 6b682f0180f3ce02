"""Canonical codes, isomorphism testing and small-graph corpora."""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from types import ModuleType

import numpy as np

from ._backend import kernels as _default_kernels
from .errors import CanonicalLimitExceeded, GraphError
from .formats import parse_graph6
from .graph import Graph

__all__ = [
    "CanonicalCode",
    "DEFAULT_ORDER_CAP",
    "DEFAULT_NODE_LIMIT",
    "CORPUS_ORDER_CAP",
    "canonical_form",
    "canonical_labeling",
    "canonical_graph",
    "is_isomorphic",
    "cheap_invariant",
    "generate_nonisomorphic",
    "labeled_graphs",
    "corpus",
]

DEFAULT_ORDER_CAP = 512
DEFAULT_NODE_LIMIT = 200_000
CORPUS_ORDER_CAP = 7


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """graph6 bytes of the canonical relabeling; equal codes mean isomorphic graphs."""

    bytes: bytes

    def hexdigest(self) -> str:
        return hashlib.sha256(self.bytes).hexdigest()

    def __str__(self) -> str:
        return self.bytes.decode("ascii")


def canonical_labeling(
    g: Graph,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    node_limit: int = DEFAULT_NODE_LIMIT,
    backend: ModuleType | None = None,
) -> tuple[list[int], CanonicalCode]:
    """Canonical vertex order (``lab[i]`` gets label ``i``) and the resulting code."""
    if g.order > order_cap:
        raise CanonicalLimitExceeded(f"order {g.order} exceeds canonicalization cap {order_cap}")
    k = backend or _default_kernels
    lab, code = k.canonical_labeling(g.order, g.rows, node_limit)
    return list(lab), CanonicalCode(code)


def canonical_form(g: Graph, **kwargs) -> CanonicalCode:
    return canonical_labeling(g, **kwargs)[1]


def canonical_graph(g: Graph, **kwargs) -> Graph:
    return parse_graph6(canonical_form(g, **kwargs).bytes)


def cheap_invariant(g: Graph) -> tuple:
    """Order, size and degree multiset: necessary conditions for isomorphism."""
    return g.order, g.size, tuple(sorted(g.degrees()))


def is_isomorphic(g1: Graph, g2: Graph, **kwargs) -> bool:
    if cheap_invariant(g1) != cheap_invariant(g2):
        return False
    return canonical_form(g1, **kwargs) == canonical_form(g2, **kwargs)


# ---------------------------------------------------------------------------
# corpora


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _rows_from_mask(mask: int, pairs: list[tuple[int, int]], n: int) -> list[int]:
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        k += 1
    return rows


def labeled_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices (``2**(n(n-1)/2)`` of them)."""
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, _rows_from_mask(mask, pairs, n))


def _degree_sorted_masks(n: int) -> np.ndarray:
    # Every isomorphism class has a labeling with non-increasing degrees, so
    # only those labeled graphs need canonicalizing.
    pairs = _pairs(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    deg = np.zeros((masks.size, n), dtype=np.int8)
    for k, (i, j) in enumerate(pairs):
        bit = ((masks >> k) & 1).astype(np.int8)
        deg[:, i] += bit
        deg[:, j] += bit
    keep = np.ones(masks.size, dtype=bool)
    for v in range(n - 1):
        keep &= deg[:, v] >= deg[:, v + 1]
    return masks[keep]


def _codes_for_masks(n: int, masks: list[int]) -> set[bytes]:
    pairs = _pairs(n)
    k = _default_kernels
    out = set()
    for mask in masks:
        rows = _rows_from_mask(mask, pairs, n)
        out.add(k.canonical_labeling(n, rows, DEFAULT_NODE_LIMIT)[1])
    return out


def generate_nonisomorphic(
    n: int,
    *,
    cap: int = CORPUS_ORDER_CAP,
    prefilter: bool = True,
    jobs: int = 1,
) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Labeled graphs are enumerated exhaustively and deduplicated by canonical
    code; the result is sorted by code.  ``prefilter`` skips labelings whose
    degrees are not non-increasing (each class keeps at least one).
    """
    if n < 1:
        raise GraphError(f"corpus order must be >= 1, got {n}")
    if n > cap:
        raise GraphError(f"corpus order {n} exceeds cap {cap}")
    if prefilter:
        masks = [int(m) for m in _degree_sorted_masks(n)]
    else:
        masks = list(range(1 << (n * (n - 1) // 2)))
    if jobs > 1 and len(masks) > 1000:
        chunk = -(-len(masks) // jobs)
        parts = [masks[k : k + chunk] for k in range(0, len(masks), chunk)]
        codes: set[bytes] = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_codes_for_masks, [n] * len(parts), parts):
                codes |= part
    else:
        codes = _codes_for_masks(n, masks)
    return [parse_graph6(c) for c in sorted(codes)]


def corpus(min_order: int, max_order: int, **kwargs) -> list[Graph]:
    """Concatenated corpora for ``min_order..max_order`` (inclusive)."""
    out: list[Graph] = []
    for n in range(min_order, max_order + 1):
        out.extend(generate_nonisomorphic(n, **kwargs))
    return out
