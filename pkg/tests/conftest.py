from __future__ import annotations

import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cliquelab import generate_nonisomorphic  # noqa: E402


@functools.lru_cache(maxsize=None)
def corpus_of_order(n: int):
    return tuple(generate_nonisomorphic(n))


def corpus_upto(hi: int, lo: int = 1):
    out = []
    for n in range(lo, hi + 1):
        out.extend(corpus_of_order(n))
    return out


@pytest.fixture(scope="session")
def corpus5():
    return corpus_upto(5)


@pytest.fixture(scope="session")
def corpus6():
    return corpus_upto(6)
