"""Shared fixtures.

The expensive resource in this suite is exhaustive counting, so a
session-scoped memo shares every brute-force count across test files:
a count computed once for one POP and one length is never recomputed.
"""

from __future__ import annotations

from typing import Callable

import pytest

from poplab.counting import count_avoiders
from poplab.posets import parse_pop

BruteCounter = Callable[[str, int], list[int]]


@pytest.fixture(scope="session")
def brute() -> BruteCounter:
    """Return ``counts(pop_text, n_max)`` giving brute-force avoider
    counts for n = 1..n_max, memoized per (POP, n) for the session."""
    cache: dict[tuple[str, int], int] = {}

    def counts(pop_text: str, n_max: int) -> list[int]:
        pop = parse_pop(pop_text)
        text = pop.to_text()
        out = []
        for n in range(1, n_max + 1):
            key = (text, n)
            if key not in cache:
                cache[key] = count_avoiders(pop, n, ceiling=12)
            out.append(cache[key])
        return out

    return counts
