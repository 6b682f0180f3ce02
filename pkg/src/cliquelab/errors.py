"""Exception types shared by the library and both kernel backends."""

from __future__ import annotations


class CliqueLabError(Exception):
    """Base class for all library errors."""


class GraphError(CliqueLabError, ValueError):
    """Invalid graph construction (bad endpoint, self-loop, bad vertex set)."""


class Graph6Error(CliqueLabError, ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class CliqueLimitExceeded(CliqueLabError):
    """Maximal-clique enumeration produced more cliques than allowed."""

    def __init__(self, limit: int, count: int) -> None:
        super().__init__(f"clique enumeration aborted: more than {limit} cliques ({count} found)")
        self.limit = limit
        self.count = count


class CanonicalLimitExceeded(CliqueLabError):
    """Canonical labeling refused or gave up; no code is ever guessed."""


class JoinStructureError(CliqueLabError):
    """A clique of a join is not the union of one clique from each factor."""

    def __init__(self, message: str, witness: dict) -> None:
        super().__init__(message)
        self.witness = witness
