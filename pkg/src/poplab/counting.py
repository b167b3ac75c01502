"""Exact counting of POP-avoiding permutations by pruned backtracking.

Permutations are built left to right by choosing each next value from
the unused ones.  A branch dies as soon as the prefix contains the
pattern, and only occurrences that end at the newest position must be
checked, because every earlier occurrence would have killed the branch
already.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .perms import Permutation
from .posets import Pop

DEFAULT_CEILING = 10
CYCLE_CEILING = 9

# cons[j], for slot j of the pattern, lists (i, want_less) checks of the
# candidate value against the values already assigned to slots i; slot
# k-1 is pinned to the last position of the prefix and assigned first.
_Constraints = tuple[tuple[tuple[int, int], ...], ...]


class CeilingExceeded(ValueError):
    """An exhaustive count was requested beyond the configured ceiling."""

    def __init__(self, n: int, ceiling: int):
        super().__init__(
            f"refusing exhaustive count at n={n} beyond ceiling {ceiling}; "
            f"pass a larger ceiling to override"
        )
        self.n = n
        self.ceiling = ceiling


@dataclass(frozen=True)
class CountSequence:
    """Avoidance counts ``counts[n]`` for n = 0..n_max of one POP."""

    pop: Pop
    counts: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def terms_from_1(self) -> tuple[int, ...]:
        return self.counts[1:]


def _slot_constraints(pop: Pop) -> _Constraints:
    k = pop.k
    below = pop.below
    cons = []
    for j in range(k - 1):
        row = []
        for i in (k - 1, *range(j)):
            if below[j][i]:
                row.append((i, 1))
            elif below[i][j]:
                row.append((i, 0))
        cons.append(tuple(row))
    return tuple(cons)


def _ends_at_last(prefix: Sequence[int], k: int, cons: _Constraints) -> bool:
    """Does an occurrence of the compiled POP end at the last position?"""
    m = len(prefix)
    if m < k:
        return False
    if k == 1:
        return True
    vals = [0] * k
    vals[k - 1] = prefix[m - 1]
    last_slot = k - 2

    def extend(j: int, start: int) -> bool:
        limit = m - k + j + 1
        checks = cons[j]
        for pos in range(start, limit):
            v = prefix[pos]
            ok = True
            for i, want_less in checks:
                if (v < vals[i]) != bool(want_less):
                    ok = False
                    break
            if not ok:
                continue
            if j == last_slot:
                return True
            vals[j] = v
            if extend(j + 1, pos + 1):
                return True
        return False

    return extend(0, 0)


def _count_completions(
    cons: _Constraints, k: int, n: int, prefix: list[int], used: list[bool]
) -> int:
    """Avoiding completions of a prefix that itself avoids the POP."""
    if len(prefix) == n:
        return 1
    total = 0
    for v in range(1, n + 1):
        if used[v]:
            continue
        prefix.append(v)
        if len(prefix) < k or not _ends_at_last(prefix, k, cons):
            used[v] = True
            total += _count_completions(cons, k, n, prefix, used)
            used[v] = False
        prefix.pop()
    return total


def _count_branch(pop: Pop, n: int, first: int) -> int:
    """Avoiders of length n whose first value is ``first``."""
    cons = _slot_constraints(pop)
    used = [False] * (n + 1)
    used[first] = True
    return _count_completions(cons, pop.k, n, [first], used)


def count_avoiders(
    pop: Pop, n: int, *, ceiling: int = DEFAULT_CEILING, jobs: int = 1
) -> int:
    """Number of permutations of length n avoiding the POP.

    With ``jobs > 1`` the search forest is partitioned by the choice of
    first value and the partial counts are summed in a fixed order, so
    the result is identical for every worker count.
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if n > ceiling:
        raise CeilingExceeded(n, ceiling)
    if n == 0:
        return 1
    if pop.k > n:
        return math.factorial(n)
    firsts = range(1, n + 1)
    if jobs <= 1:
        cons = _slot_constraints(pop)
        total = 0
        for first in firsts:
            used = [False] * (n + 1)
            used[first] = True
            total += _count_completions(cons, pop.k, n, [first], used)
        return total
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_branch, [pop] * n, [n] * n, firsts))


def count_avoiders_prefix(
    pop: Pop, n_max: int, *, ceiling: int = DEFAULT_CEILING
) -> CountSequence:
    """Avoidance counts for every length 0..n_max, one pass per length."""
    if n_max < 0:
        raise ValueError(f"length must be nonnegative, got {n_max}")
    if n_max > ceiling:
        raise CeilingExceeded(n_max, ceiling)
    counts = [count_avoiders(pop, n, ceiling=ceiling) for n in range(n_max + 1)]
    return CountSequence(pop, tuple(counts))


def _pattern_ends_at_last(prefix: Sequence[int], pat: tuple[int, ...]) -> bool:
    """Does an occurrence of the classical pattern end at the last position?

    Kept independent of the POP machinery on purpose: it compares
    candidate values through the pattern's ranks, so the two engines can
    cross-check each other.
    """
    k = len(pat)
    m = len(prefix)
    if m < k:
        return False
    last_val = prefix[m - 1]
    last_rank = pat[k - 1]
    chosen: list[int] = []

    def extend(slot: int, start: int) -> bool:
        for pos in range(start, m - k + slot + 1):
            v = prefix[pos]
            if (v < last_val) != (pat[slot] < last_rank):
                continue
            if any((v > c) != (pat[slot] > pat[i]) for i, c in enumerate(chosen)):
                continue
            if slot == k - 2:
                return True
            chosen.append(v)
            if extend(slot + 1, pos + 1):
                return True
            chosen.pop()
        return False

    if k == 1:
        return True
    return extend(0, 0)


def count_avoiders_pattern_set(
    patterns: Sequence[Permutation], n: int, *, ceiling: int = DEFAULT_CEILING
) -> int:
    """Avoiders of a plain set of classical patterns.

    Feeding this the linear extensions of a POP must reproduce
    ``count_avoiders`` for that POP.
    """
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if n > ceiling:
        raise CeilingExceeded(n, ceiling)
    if n == 0:
        return 1
    pats = tuple(tuple(p) for p in patterns)

    def completions(prefix: list[int], used: list[bool]) -> int:
        if len(prefix) == n:
            return 1
        total = 0
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if not any(_pattern_ends_at_last(prefix, pat) for pat in pats):
                used[v] = True
                total += completions(prefix, used)
                used[v] = False
            prefix.pop()
        return total

    return completions([], [False] * (n + 1))


def count_cycle_interval_perms(
    k: int, n: int, *, ceiling: int = CYCLE_CEILING
) -> int:
    """Permutations of length n whose every cycle fits in an interval
    of at most k-1 consecutive integers.

    This is a direct filter over all of S_n, deliberately independent of
    the pattern machinery; it serves as the other side of a bijection
    check against ``count_avoiders``.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if n > ceiling:
        raise CeilingExceeded(n, ceiling)
    if n == 0:
        return 1
    w = k - 1
    if w < 1:
        return 0
    total = 0
    for p in permutations(range(1, n + 1)):
        seen = 0
        ok = True
        for i in range(1, n + 1):
            if seen >> i & 1:
                continue
            lo = hi = i
            seen |= 1 << i
            j = p[i - 1]
            while j != i:
                seen |= 1 << j
                if j < lo:
                    lo = j
                elif j > hi:
                    hi = j
                if hi - lo >= w:
                    ok = False
                    break
                j = p[j - 1]
            if not ok:
                break
        if ok:
            total += 1
    return total


def naive_count_avoiders(pop: Pop, n: int, *, ceiling: int = 7) -> int:
    """Filter all of S_n through the containment test.  Slow; used as an
    independent oracle for the pruned engine."""
    if n > ceiling:
        raise CeilingExceeded(n, ceiling)
    if n == 0:
        return 1
    return sum(
        1
        for vals in permutations(range(1, n + 1))
        if not Permutation(vals).contains_pop(pop)
    )
