"""Partitions, Gelfand-Zetlin patterns and the occupation basis of the symmetric irrep.

Canonical order everywhere is lexicographically descending: patterns compare their
rows top to bottom, occupation vectors compare entries left to right.  Index 0 is
therefore the highest-weight vector, which for the symmetric irrep ``[n, 0, ..., 0]``
is ``|0>^n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

INT64_MAX = 2**63 - 1


class DimensionOverflow(OverflowError):
    """A dimension does not fit in a signed 64-bit integer."""


class ScaleError(ValueError):
    """Requested size is beyond the validation-scale cap of a dense routine."""


class Partition(tuple):
    """Non-increasing tuple of non-negative integers with explicit trailing zeros."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts are not non-increasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def symmetric(cls, n: int, d: int) -> "Partition":
        """The one-row partition ``[n, 0, ..., 0]`` with ``d`` parts."""
        if d < 1:
            raise ValueError("d must be >= 1")
        return cls((n,) + (0,) * (d - 1))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def d(self) -> int:
        return len(self)

    def add_box(self, j: int) -> "Partition | None":
        """Return ``self + e_j`` (1-based ``j``) or None when it is not a partition."""
        if not 1 <= j <= len(self):
            raise ValueError(f"row index {j} out of range for {len(self)} parts")
        if j > 1 and self[j - 2] == self[j - 1]:
            return None
        parts = list(self)
        parts[j - 1] += 1
        return Partition(parts)

    def remove_box(self, j: int) -> "Partition | None":
        if not 1 <= j <= len(self):
            raise ValueError(f"row index {j} out of range for {len(self)} parts")
        if self[j - 1] == 0 or (j < len(self) and self[j] == self[j - 1]):
            return None
        parts = list(self)
        parts[j - 1] -= 1
        return Partition(parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def _as_partition(p: Sequence[int], d: int | None = None) -> Partition:
    p = p if isinstance(p, Partition) else Partition(p)
    if d is None or len(p) == d:
        return p
    if len(p) < d:
        return Partition(tuple(p) + (0,) * (d - len(p)))
    if any(p[d:]):
        raise ValueError(f"{list(p)} has more than {d} nonzero parts")
    return Partition(p[:d])


def interlaces(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Betweenness test ``lam[i] >= mu[i] >= lam[i+1]`` for a row ``mu`` one level below ``lam``.

    ``mu`` may be given with fewer than ``len(lam) - 1`` parts (zero padded) or with
    ``len(lam)`` parts when its last part is zero.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    d = len(lam)
    if d == 0:
        raise ValueError("lambda must have at least one part")
    if len(mu) == d and mu[-1] == 0:
        mu = mu[:-1]
    if len(mu) > d - 1:
        raise ValueError(f"row of length {len(mu)} cannot sit below a row of length {d}")
    mu = mu + (0,) * (d - 1 - len(mu))
    return all(lam[i] >= mu[i] >= lam[i + 1] for i in range(d - 1))


def add_box_set(mu: Sequence[int]) -> list[Partition]:
    """All partitions ``mu + e_j``, in canonical (descending) order."""
    mu = _as_partition(mu)
    out = [mu.add_box(j) for j in range(1, len(mu) + 1)]
    return [p for p in out if p is not None]


def remove_box_set(lam: Sequence[int]) -> list[Partition]:
    """All partitions ``lam - e_j``; empty for the zero partition."""
    lam = _as_partition(lam)
    out = [lam.remove_box(j) for j in range(1, len(lam) + 1)]
    return [p for p in out if p is not None]


@dataclass(frozen=True, order=True)
class GelfandPattern:
    """Triangular array of interlacing rows, ``rows[0]`` being the level-d row.

    Row ``r`` has ``d - r`` entries.  Dataclass ordering compares rows top to bottom,
    so ``sorted(..., reverse=True)`` gives the canonical order.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        d = len(rows)
        if d == 0:
            raise ValueError("a pattern needs at least one row")
        for r, row in enumerate(rows):
            if len(row) != d - r:
                raise ValueError(f"row {r} has length {len(row)}, expected {d - r}")
            Partition(row)
        for r in range(d - 1):
            if not interlaces(rows[r + 1], rows[r]):
                raise ValueError(f"rows {rows[r]} and {rows[r + 1]} do not interlace")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> Partition:
        return Partition(self.rows[0])

    @property
    def sub(self) -> "GelfandPattern":
        """The pattern obtained by dropping the top row (a U(d-1) pattern)."""
        if self.d == 1:
            raise ValueError("a one-row pattern has no sub-pattern")
        return GelfandPattern(self.rows[1:])

    def row_sums(self) -> tuple[int, ...]:
        """Row sums from level 1 up to level d."""
        return tuple(sum(r) for r in reversed(self.rows))

    def weight(self) -> tuple[int, ...]:
        """Content vector: letter ``s`` appears ``m_s - m_{s-1}`` times."""
        m = (0,) + self.row_sums()
        return tuple(m[s + 1] - m[s] for s in range(self.d))

    @property
    def n_entries(self) -> int:
        return self.d * (self.d + 1) // 2

    def __repr__(self) -> str:
        return f"GelfandPattern({[list(r) for r in self.rows]})"


def _branch(top: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Rows one level below ``top`` that interlace it, in descending order."""
    d = len(top)
    if d == 1:
        return
    ranges = [range(top[i], top[i + 1] - 1, -1) for i in range(d - 1)]

    def rec(i, prefix):
        if i == d - 1:
            yield tuple(prefix)
            return
        for v in ranges[i]:
            yield from rec(i + 1, prefix + [v])

    yield from rec(0, [])


def partitions_below(top: Sequence[int]) -> list[Partition]:
    """Rows of length ``len(top) - 1`` that interlace ``top``, in descending order."""
    return [Partition(r) for r in _branch(tuple(top))]


def _pattern_rows(top: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if len(top) == 1:
        yield (top,)
        return
    for nxt in _branch(top):
        for rest in _pattern_rows(nxt):
            yield (top,) + rest


def enumerate_patterns(lam: Sequence[int], d: int | None = None) -> list[GelfandPattern]:
    """All Gelfand-Zetlin patterns with top row ``lam``, in canonical order."""
    lam = _as_partition(lam, d)
    if len(lam) == 0:
        raise ValueError("empty partition")
    # _branch yields descending rows, so the depth-first walk is already sorted.
    return [GelfandPattern(rows) for rows in _pattern_rows(tuple(lam))]


@lru_cache(maxsize=None)
def _count_patterns(top: tuple[int, ...]) -> int:
    if len(top) == 1:
        return 1
    return sum(_count_patterns(nxt) for nxt in _branch(top))


def dim_irrep(lam: Sequence[int], d: int | None = None) -> int:
    """Dimension of the U(d) irrep ``lam``, counted by walking the branching tree."""
    lam = _as_partition(lam, d)
    return _count_patterns(tuple(lam))


def dim_symmetric(n: int, d: int) -> int:
    """Number of occupation vectors of weight ``n`` over ``d`` letters, ``C(n+d-1, d-1)``."""
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    value = math.comb(n + d - 1, d - 1)
    if value > INT64_MAX:
        raise DimensionOverflow(f"dim_symmetric({n}, {d}) = {value} exceeds 64-bit range")
    return value


def partitions(weight: int, d: int) -> list[Partition]:
    """Partitions of ``weight`` into at most ``d`` parts, zero padded, in descending order."""
    if weight < 0 or d < 1:
        raise ValueError(f"need weight >= 0 and d >= 1, got {weight}, {d}")

    def rec(rest, cap, slots):
        if slots == 0:
            if rest == 0:
                yield ()
            return
        for v in range(min(rest, cap), -1, -1):
            for tail in rec(rest - v, v, slots - 1):
                yield (v,) + tail

    return [Partition(p) for p in rec(weight, weight, d)]


def _check_occupation(c: Sequence[int]) -> tuple[int, ...]:
    c = tuple(int(x) for x in c)
    if not c:
        raise ValueError("occupation vector must have at least one entry")
    if any(x < 0 for x in c):
        raise ValueError(f"negative count in occupation {c}")
    return c


def enumerate_occupations(n: int, d: int) -> list[tuple[int, ...]]:
    """All ``c`` with ``sum(c) == n`` and ``len(c) == d`` in lexicographically descending order."""
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")

    def rec(rest, slots):
        if slots == 1:
            yield (rest,)
            return
        for v in range(rest, -1, -1):
            for tail in rec(rest - v, slots - 1):
                yield (v,) + tail

    return list(rec(n, d))


@lru_cache(maxsize=256)
def occupation_table(n: int, d: int) -> np.ndarray:
    """Read-only int64 array of shape ``(dim_symmetric(n, d), d)`` in canonical order."""
    table = np.array(enumerate_occupations(n, d), dtype=np.int64).reshape(-1, d)
    table.setflags(write=False)
    return table


def occupation_index(c: Sequence[int]) -> int:
    """Rank of ``c`` among occupation vectors of the same weight and length."""
    c = _check_occupation(c)
    d = len(c)
    rest = sum(c)
    rank = 0
    for s, cs in enumerate(c[:-1]):
        slots_after = d - s - 1
        # every vector sharing the prefix but holding more in slot s comes first
        for v in range(cs + 1, rest + 1):
            rank += dim_symmetric(rest - v, slots_after) if slots_after else 1
        rest -= cs
    return rank


def occupation_of_index(index: int, n: int, d: int) -> tuple[int, ...]:
    size = dim_symmetric(n, d)
    if not 0 <= index < size:
        raise ValueError(f"index {index} out of range [0, {size})")
    out = []
    rest = n
    for s in range(d - 1):
        slots_after = d - s - 1
        for v in range(rest, -1, -1):
            block = dim_symmetric(rest - v, slots_after)
            if index < block:
                out.append(v)
                rest -= v
                break
            index -= block
    out.append(rest)
    return tuple(out)


def pattern_of_occupation(c: Sequence[int]) -> GelfandPattern:
    """Symmetric pattern whose level-s row is ``[c_1 + ... + c_s, 0, ..., 0]``."""
    c = _check_occupation(c)
    d = len(c)
    prefix = np.cumsum(c)
    rows = tuple((int(prefix[s - 1]),) + (0,) * (s - 1) for s in range(d, 0, -1))
    return GelfandPattern(rows)


def occupation_of_pattern(p: GelfandPattern) -> tuple[int, ...]:
    if any(any(row[1:]) for row in p.rows):
        raise ValueError(f"{p} is not a pattern of a one-row partition")
    return p.weight()
