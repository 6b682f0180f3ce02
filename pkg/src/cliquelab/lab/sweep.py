"""Run one checker over every ordered pair of a graph corpus."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..canon import CORPUS_ORDER_CAP, corpus as generated_corpus
from ..cliques import Decision, is_clique_helly
from ..formats import read_graph6_file
from ..graph import Graph, from_rows, is_connected
from .checkers import check
from .verdict import CheckConfig, ConjectureId, Outcome, Verdict, exit_code

__all__ = ["CorpusSpec", "RandomPairs", "SweepReport", "load_corpus", "random_graph", "sweep"]


@dataclass(frozen=True)
class CorpusSpec:
    """Order bounds for a generated corpus, or a graph6 file; optional filters."""

    min_order: int = 1
    max_order: int = 4
    path: str | None = None
    connected_only: bool = False
    helly_only: bool = False

    def describe(self) -> dict:
        out: dict = {"source": self.path} if self.path else {"min_order": self.min_order, "max_order": self.max_order}
        out["connected_only"] = self.connected_only
        out["helly_only"] = self.helly_only
        return out


def load_corpus(spec: CorpusSpec, helly_cap: int | None = None) -> list[Graph]:
    if spec.path is not None:
        graphs = read_graph6_file(spec.path)
    else:
        if spec.max_order > CORPUS_ORDER_CAP:
            raise ValueError(f"corpus orders are capped at {CORPUS_ORDER_CAP}")
        graphs = generated_corpus(spec.min_order, spec.max_order)
    if spec.connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    if spec.helly_only:
        kw = {} if helly_cap is None else {"family_cap": helly_cap}
        graphs = [g for g in graphs if is_clique_helly(g, **kw).decision is Decision.TRUE]
    return graphs


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return from_rows(rows)


@dataclass(frozen=True)
class RandomPairs:
    """``count`` seeded pairs of G(n, 1/2) graphs with orders drawn uniformly from the range."""

    count: int
    min_order: int
    max_order: int
    seed: int = 0

    def describe(self) -> dict:
        return {"random_pairs": self.count, "min_order": self.min_order, "max_order": self.max_order,
                "seed": self.seed}

    def pairs(self) -> list[tuple[Graph, Graph]]:
        rng = random.Random(self.seed)
        out = []
        for _ in range(self.count):
            g1 = random_graph(rng.randint(self.min_order, self.max_order), rng)
            g2 = random_graph(rng.randint(self.min_order, self.max_order), rng)
            out.append((g1, g2))
        return out


@dataclass
class SweepReport:
    conjecture: ConjectureId
    corpus: dict
    verdicts: list[Verdict]
    tallies: dict[str, int] = field(default_factory=dict)
    runtime_ms: float | None = None

    def __post_init__(self) -> None:
        if not self.tallies:
            self.tallies = {o.value: 0 for o in Outcome}
            for v in self.verdicts:
                self.tallies[v.outcome.value] += 1

    @property
    def instances(self) -> int:
        return len(self.verdicts)

    def count(self, outcome: Outcome) -> int:
        return self.tallies[Outcome(outcome).value]

    @property
    def exit_code(self) -> int:
        return exit_code(v.outcome for v in self.verdicts)

    def to_dict(self, timestamps: bool = True) -> dict:
        out = {
            "conjecture": self.conjecture.value,
            "corpus": self.corpus,
            "instances": self.instances,
            "tallies": self.tallies,
            "verdicts": [v.to_dict(timestamps) for v in self.verdicts],
        }
        if timestamps and self.runtime_ms is not None:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def _run_one(args) -> Verdict:
    tag, g1, g2, config = args
    start = time.perf_counter()
    try:
        return check(tag, g1, g2, config)
    except Exception as exc:  # recorded, never aborts the sweep
        return Verdict(tag, Outcome.INCONCLUSIVE, g1, g2, tag.kind,
                       reason=f"checker error: {type(exc).__name__}: {exc}",
                       runtime_ms=(time.perf_counter() - start) * 1000.0)


def sweep(
    conjecture: ConjectureId | str,
    corpus: CorpusSpec | RandomPairs | list[Graph],
    config: CheckConfig = CheckConfig(),
    jobs: int = 1,
) -> SweepReport:
    """Check ``conjecture`` on all ordered pairs ``(g1, g2)`` of the corpus.

    Instances are ordered by ``(index of g1, index of g2)``, or by draw order
    for :class:`RandomPairs`; parallel runs return the same report as serial
    ones.
    """
    tag = ConjectureId(conjecture)
    start = time.perf_counter()
    if isinstance(corpus, RandomPairs):
        pairs = corpus.pairs()
        descriptor = corpus.describe()
    else:
        if isinstance(corpus, CorpusSpec):
            graphs = load_corpus(corpus, config.helly_cap)
            descriptor = corpus.describe()
        else:
            graphs = list(corpus)
            descriptor = {"source": "explicit", "graphs": len(graphs)}
        pairs = [(g1, g2) for g1 in graphs for g2 in graphs]
    tasks = [(tag, g1, g2, config) for g1, g2 in pairs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_run_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        verdicts = [_run_one(t) for t in tasks]
    report = SweepReport(tag, descriptor, verdicts)
    report.runtime_ms = (time.perf_counter() - start) * 1000.0
    return report
