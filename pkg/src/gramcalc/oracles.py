"""Brute-force enumeration oracles and the list statistics they count.

Everything here is deliberately direct: objects are enumerated one by
one in a fixed deterministic order and statistics are computed from
their definitions, so these counts can sit on the independent side of a
cross-check against recurrences and closed forms.

Statistic conventions on a list w of distinct integers, 1-based:

* descent: position i with w_i > w_{i+1}.
* left peak: index i in [1, n-1] with w_{i-1} < w_i > w_{i+1}, reading
  w_0 = 0; the final entry is never a left peak.
* right valley: entry w_i, i in [2, n], with w_{i-1} > w_i < w_{i+1},
  reading w_{n+1} = +infinity; the final entry can be a right valley.
* las: length of the longest alternating subsequence whose comparisons
  run descent, ascent, descent, ...; a single entry has las 1, the empty
  list is an error.

A cyclically ordered partition of [n] is kept in canonical form: a tuple
of blocks, each block increasing, the block containing 1 first.  The
openers of such a partition are the block minima in block order.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Sequence

from . import config
from .errors import EmptyList
from .triangles import TriangleTable, _fill

Cop = tuple[tuple[int, ...], ...]
Matching = tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# Statistics.


def descents(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def left_peaks(w: Sequence[int]) -> int:
    """Count left peaks, with a 0 sentinel before the first entry."""
    count = 0
    for i in range(len(w) - 1):
        prev = w[i - 1] if i > 0 else 0
        if prev < w[i] > w[i + 1]:
            count += 1
    return count


def right_valleys(w: Sequence[int]) -> int:
    """Count right valleys, with a +infinity sentinel after the last entry."""
    count = 0
    n = len(w)
    for i in range(1, n):
        nxt = w[i + 1] if i + 1 < n else math.inf
        if w[i - 1] > w[i] < nxt:
            count += 1
    return count


def las(w: Sequence[int]) -> int:
    """Longest alternating subsequence length (first comparison a descent).

    Quadratic dynamic programming over end positions, tracking the best
    odd and even subsequence lengths ending at each entry.
    """
    if not w:
        raise EmptyList("las is undefined on an empty list")
    n = len(w)
    best_odd = [1] * n
    best_even = [0] * n
    for j in range(n):
        for i in range(j):
            if w[i] > w[j] and best_odd[i] + 1 > best_even[j]:
                best_even[j] = best_odd[i] + 1
            if w[i] < w[j] and best_even[i] + 1 > best_odd[j]:
                best_odd[j] = best_even[i] + 1
    return max(max(best_odd), max(best_even))


def openers(cop: Cop) -> tuple[int, ...]:
    """Block minima of a canonical cyclically ordered partition, in order."""
    return tuple(block[0] for block in cop)


def des_b(pi: Sequence[int]) -> int:
    """Type-B descents of a signed permutation, including the 0 sentinel."""
    prev = 0
    count = 0
    for value in pi:
        if prev > value:
            count += 1
        prev = value
    return count


def odd_smaller_count(matching: Matching) -> int:
    """Pairs of a perfect matching whose smaller entry is odd."""
    return sum(1 for pair in matching if min(pair) % 2 == 1)


# ---------------------------------------------------------------------------
# Enumeration.


def enumerate_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """Permutations of [n] in lexicographic order."""
    config.check("permutations", n)
    return itertools.permutations(range(1, n + 1))


def enumerate_signed(n: int) -> Iterator[tuple[int, ...]]:
    """Signed permutations of [n]: every permutation under every sign vector."""
    config.check("signed", n)

    def gen() -> Iterator[tuple[int, ...]]:
        for perm in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                yield tuple(s * v for s, v in zip(signs, perm))

    return gen()


def enumerate_matchings(n: int) -> Iterator[Matching]:
    """Perfect matchings of [2n], pairs listed smallest-first."""
    config.check("matchings", n)

    def gen(elems: tuple[int, ...]) -> Iterator[Matching]:
        if not elems:
            yield ()
            return
        first = elems[0]
        for idx in range(1, len(elems)):
            rest = elems[1:idx] + elems[idx + 1 :]
            for sub in gen(rest):
                yield ((first, elems[idx]),) + sub

    return gen(tuple(range(1, 2 * n + 1)))


def _set_partitions(n: int) -> list[Cop]:
    """Partitions of [n] as canonical block tuples, blocks ordered by minimum."""
    out: list[Cop] = []
    blocks: list[list[int]] = []

    def rec(i: int) -> None:
        if i > n:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1)
            b.pop()
        blocks.append([i])
        rec(i + 1)
        blocks.pop()

    rec(1)
    return out


@lru_cache(maxsize=None)
def _cops(n: int) -> tuple[Cop, ...]:
    cops: list[Cop] = []
    for blocks in _set_partitions(n):
        first, rest = blocks[0], blocks[1:]
        for arrangement in itertools.permutations(rest):
            cops.append((first,) + arrangement)
    cops.sort(key=lambda cop: (len(cop), cop))
    return tuple(cops)


def enumerate_cops(n: int) -> Iterator[Cop]:
    """Cyclically ordered partitions of [n] in canonical form.

    Order: by block count, then lexicographically on the block tuples.
    """
    config.check("cops", n)
    return iter(_cops(n))


# ---------------------------------------------------------------------------
# Count tables.

_STATS = {"descents": descents, "right_valleys": right_valleys, "las": las}


def stat_names() -> tuple[str, ...]:
    return tuple(_STATS)


@lru_cache(maxsize=None)
def _cop_stat_items(n: int, stat: str) -> tuple[tuple[tuple[int, int], int], ...]:
    fn = _STATS[stat]
    counts: dict[tuple[int, int], int] = {}
    for cop in _cops(n):
        key = (len(cop), fn(openers(cop)))
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def cop_stat_table(n: int, stat: str) -> dict[tuple[int, int], int]:
    """Counts of cyclically ordered partitions of [n] by (blocks, statistic).

    The statistic is applied to the opener list; recognized names are
    descents, right_valleys, and las.
    """
    if stat not in _STATS:
        raise ValueError(f"unknown statistic {stat!r}; choose from {', '.join(_STATS)}")
    config.check("cops", n)
    return dict(_cop_stat_items(n, stat))


def u_table(nmax: int) -> dict[tuple[int, int, int], int]:
    """Valley-count table built purely from its three-term recurrence.

    u[n, k, l] counts cyclically ordered partitions of [n] with k blocks
    and l right valleys in the opener list, seeded by u[1, 1, 0] = 1 and
    grown level by level; no enumeration is involved, which makes this
    the recurrence side of a cross-check against enumerate_cops.
    """
    if nmax < 1:
        raise ValueError(f"nmax must be at least 1, got {nmax}")
    u: dict[tuple[int, int, int], int] = {(1, 1, 0): 1}
    for n in range(2, nmax + 1):
        for k in range(1, n + 1):
            for l in range((k - 1) // 2 + 1):
                value = (
                    k * u.get((n - 1, k, l), 0)
                    + (2 * l + 1) * u.get((n - 1, k - 1, l), 0)
                    + (k - 2 * l) * u.get((n - 1, k - 1, l - 1), 0)
                )
                if value:
                    u[(n, k, l)] = value
    return u


@lru_cache(maxsize=None)
def _perm_stat_items(n: int, stat: str) -> tuple[tuple[int, int], ...]:
    fn = _STATS[stat] if stat != "left_peaks" else left_peaks
    counts: dict[int, int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        value = fn(perm)
        counts[value] = counts.get(value, 0) + 1
    return tuple(sorted(counts.items()))


def left_peak_counts(n: int) -> dict[int, int]:
    """Distribution of left peaks over all permutations of [n], by count."""
    config.check("permutations", n)
    return dict(_perm_stat_items(n, "left_peaks"))


def las_counts(n: int) -> dict[int, int]:
    """Distribution of las over all permutations of [n], by length.

    The empty permutation is assigned las 0 by convention so that row 0
    of the derived table exists.
    """
    if n == 0:
        return {0: 1}
    config.check("permutations", n)
    return dict(_perm_stat_items(n, "las"))


def left_peak_table(max_n: int) -> TriangleTable:
    """Left-peak counts over S_0..S_max_n as a TriangleTable."""
    table = TriangleTable(name="left_peak", max_n=max_n)
    for n in range(max_n + 1):
        counts = left_peak_counts(n)
        _fill(table, n, 0, max(counts), counts.get)
    return table


def las_table(max_n: int) -> TriangleTable:
    """las counts over S_0..S_max_n as a TriangleTable."""
    table = TriangleTable(name="las", max_n=max_n)
    for n in range(max_n + 1):
        counts = las_counts(n)
        _fill(table, n, min(counts), max(counts), counts.get)
    return table
