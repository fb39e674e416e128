"""Clebsch-Gordan transforms coupling a U(d) irrep with one more qudit.

Two constructions share the reduced Wigner coefficients:

* :func:`build_cg_symmetric` gives the block ``Q_[k] (x) C^d -> Q_[k+1]`` used by the
  compression cascade.  It is stored sparsely: each output occupation ``c'`` is fed by at
  most ``d`` columns ``(c' - e_i, i)``.
* :func:`build_cg_full` gives the whole unitary onto ``(+)_{lam in mu+box} Q_lam`` for
  small validation cases, recursing through the (d-1)-dimensional transform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinatorics import (
    GelfandPattern,
    Partition,
    ScaleError,
    add_box_set,
    dim_symmetric,
    enumerate_patterns,
    interlaces,
    occupation_table,
)
from .wigner import wigner_coefficient

FULL_CG_MAX_D = 3
FULL_CG_MAX_WEIGHT = 4
COMPLETION_SKIP = 1e-8


@dataclass(frozen=True, eq=False)
class CgIsometry:
    """Symmetric block of the CG transform at input weight ``k``.

    ``src[r, i]`` is the input occupation index feeding output row ``r`` through letter
    ``i + 1`` (``-1`` if ``c'_i == 0``) and ``coef[r, i]`` is the matrix entry.
    Column ``(c, i)`` of the dense matrix sits at ``occupation_index(c) * d + i``.
    """

    d: int
    k: int
    src: np.ndarray
    coef: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return dim_symmetric(self.k + 1, self.d), dim_symmetric(self.k, self.d) * self.d

    @property
    def row_index(self) -> np.ndarray:
        return occupation_table(self.k + 1, self.d)

    @property
    def col_index(self) -> list[tuple[tuple[int, ...], int]]:
        occ = occupation_table(self.k, self.d)
        return [(tuple(int(x) for x in c), i) for c in occ for i in range(1, self.d + 1)]

    @property
    def matrix(self) -> np.ndarray:
        """Dense complex matrix; size grows as ``dim_symmetric(k, d)**2``."""
        rows, cols = self.shape
        out = np.zeros((rows, cols), dtype=np.complex128)
        r, i = np.nonzero(self.src >= 0)
        out[r, self.src[r, i] * self.d + i] = self.coef[r, i]
        return out


@dataclass(frozen=True, eq=False)
class CgUnitary:
    """Square unitary with labelled row blocks.

    ``block_map`` lists ``(label, start, stop)``; labels are output partitions, or
    ``None`` for rows added by :func:`complete_to_unitary`.
    """

    d: int
    k: int
    matrix: np.ndarray
    block_map: tuple[tuple[Partition | None, int, int], ...]
    row_labels: tuple = field(default=(), repr=False)
    col_labels: tuple = field(default=(), repr=False)

    def block(self, label) -> np.ndarray:
        for lab, start, stop in self.block_map:
            if lab == label:
                return self.matrix[start:stop]
        raise KeyError(label)


def build_cg_d1(k: int) -> CgIsometry:
    """At d = 1 the transform is the 1x1 identity taking weight k to k + 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    src = np.zeros((1, 1), dtype=np.int64)
    coef = np.ones((1, 1))
    src.setflags(write=False)
    coef.setflags(write=False)
    return CgIsometry(1, k, src, coef)


def _one_row(w: int, length: int) -> tuple[int, ...]:
    return (int(w),) + (0,) * (length - 1)


def _level_factor(level: int, top_w: np.ndarray, next_w: np.ndarray, j_prime: int,
                  literal_signs: bool) -> np.ndarray:
    """Reduced Wigner value with j = 1 on one-row partitions, vectorized over weights."""
    keys = top_w * (int(top_w.max(initial=0)) + 2) + next_w
    _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
    vals = np.array([
        wigner_coefficient(_one_row(top_w[p], level), _one_row(next_w[p], level - 1), 1,
                           j_prime, literal_signs)
        for p in first
    ])
    return vals[inverse]


def _symmetric_entries(occ: np.ndarray, letter: int, literal_signs: bool) -> np.ndarray:
    """Raw (unsigned-fixed) CG entries for input occupations ``occ`` absorbing ``letter``.

    Below the absorbing level the letter is handled by the (d-1)-dimensional transform
    and recorded with j' = 1; at the absorbing level it enters with j' = 0.
    """
    d = occ.shape[1]
    if d == 1:
        return np.ones(len(occ))
    top_w = occ.sum(axis=1)
    next_w = occ[:, : d - 1].sum(axis=1)
    if letter < d:
        below = _symmetric_entries(occ[:, : d - 1], letter, literal_signs)
        return below * _level_factor(d, top_w, next_w, 1, literal_signs)
    return _level_factor(d, top_w, next_w, 0, literal_signs)


def _occupation_keys(occ: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(occ.shape[1] - 1, -1, -1, dtype=np.int64)
    return occ @ weights


@lru_cache(maxsize=512)
def build_cg_symmetric(d: int, k: int, literal_signs: bool = False) -> CgIsometry:
    """Symmetric-tower CG block ``Q_[k]^d (x) C^d -> Q_[k+1]^d``.

    Rows are phase-fixed so that the entry in the smallest column is positive.
    Results are cached per ``(d, k)``; the arrays are read-only.
    """
    if d < 1 or k < 0:
        raise ValueError(f"need d >= 1 and k >= 0, got d={d}, k={k}")
    if d == 1:
        return build_cg_d1(k)
    n_out = dim_symmetric(k + 1, d)
    out_occ = occupation_table(k + 1, d)
    in_occ = occupation_table(k, d)

    # input occupations are sorted by descending key, so search on negated keys
    base = k + 2
    in_keys = -_occupation_keys(in_occ, base)
    src = np.full((n_out, d), -1, dtype=np.int64)
    coef = np.zeros((n_out, d))
    for i in range(d):
        rows = np.nonzero(out_occ[:, i] > 0)[0]
        c = out_occ[rows].copy()
        c[:, i] -= 1
        src[rows, i] = np.searchsorted(in_keys, -_occupation_keys(c, base))
        coef[rows, i] = _symmetric_entries(c, i + 1, literal_signs)

    cols = np.where(src >= 0, src * d + np.arange(d), np.iinfo(np.int64).max)
    lead = coef[np.arange(n_out), cols.argmin(axis=1)]
    coef *= np.where(lead < 0, -1.0, 1.0)[:, None]

    src.setflags(write=False)
    coef.setflags(write=False)
    return CgIsometry(d, k, src, coef)


def _cg_action(pattern: GelfandPattern, letter: int) -> dict[GelfandPattern, float]:
    """Image of ``|pattern>|letter>`` under the full CG transform, as a sparse vector."""
    d = pattern.d
    top = pattern.top
    if d == 1:
        return {GelfandPattern(((top[0] + 1,),)): 1.0}
    sub = pattern.sub
    if letter < d:
        branches = []
        for new_sub, amp in _cg_action(sub, letter).items():
            j_prime = next(s for s in range(d - 1) if new_sub.rows[0][s] != sub.rows[0][s]) + 1
            branches.append((new_sub, amp, j_prime))
    else:
        branches = [(sub, 1.0, 0)]

    out: dict[GelfandPattern, float] = {}
    for new_sub, amp, j_prime in branches:
        for j in range(1, d + 1):
            lam = top.add_box(j)
            if lam is None or not interlaces(new_sub.rows[0], lam):
                continue
            value = amp * wigner_coefficient(tuple(top), tuple(sub.rows[0]), j, j_prime)
            key = GelfandPattern((tuple(lam),) + new_sub.rows)
            out[key] = out.get(key, 0.0) + value
    return out


def build_cg_full(d: int, mu: Sequence[int]) -> CgUnitary:
    """Full CG unitary on ``Q_mu^d (x) C^d``, rows grouped by ``lam in mu + box``.

    Columns are ``(pattern, letter)`` with patterns in canonical order; rows are the
    canonical patterns of each output irrep, irreps in descending order.
    """
    mu = Partition(tuple(mu) + (0,) * (d - len(mu))) if len(mu) < d else Partition(mu)
    if len(mu) != d:
        raise ValueError(f"partition {list(mu)} does not have {d} parts")
    if d > FULL_CG_MAX_D or mu.weight > FULL_CG_MAX_WEIGHT:
        raise ScaleError(f"build_cg_full is capped at d <= {FULL_CG_MAX_D}, "
                         f"weight <= {FULL_CG_MAX_WEIGHT}")
    col_labels = tuple((p, i) for p in enumerate_patterns(mu) for i in range(1, d + 1))
    row_labels = []
    block_map = []
    for lam in add_box_set(mu):
        start = len(row_labels)
        row_labels.extend(enumerate_patterns(lam))
        block_map.append((lam, start, len(row_labels)))
    if len(row_labels) != len(col_labels):
        raise AssertionError("output dimension does not match d * dim(mu)")

    row_of = {p: r for r, p in enumerate(row_labels)}
    matrix = np.zeros((len(row_labels), len(col_labels)), dtype=np.complex128)
    for c, (p, i) in enumerate(col_labels):
        for q, value in _cg_action(p, i).items():
            matrix[row_of[q], c] += value
    matrix.setflags(write=False)
    return CgUnitary(d, mu.weight, matrix, tuple(block_map), tuple(row_labels), col_labels)


def complete_to_unitary(w: CgIsometry) -> CgUnitary:
    """Extend the orthonormal rows of ``w`` to a unitary.

    Canonical basis vectors are tried in index order and Gram-Schmidt'd (two passes)
    against the rows so far; residuals below 1e-8 are skipped.
    """
    top = w.matrix
    rows, cols = top.shape
    basis = np.zeros((cols, cols), dtype=np.complex128)
    basis[:rows] = top
    filled = rows
    for m in range(cols):
        if filled == cols:
            break
        v = np.zeros(cols, dtype=np.complex128)
        v[m] = 1.0
        for _ in range(2):
            q = basis[:filled]
            v = v - q.T @ (q.conj() @ v)
        norm = np.linalg.norm(v)
        if norm < COMPLETION_SKIP:
            continue
        basis[filled] = v / norm
        filled += 1
    if filled != cols:
        raise AssertionError("completion did not reach full rank")
    basis.setflags(write=False)
    label = Partition.symmetric(w.k + 1, w.d)
    block_map = ((label, 0, rows),) + (((None, rows, cols),) if cols > rows else ())
    return CgUnitary(w.d, w.k, basis, block_map)


@lru_cache(maxsize=64)
def completed_symmetric(d: int, k: int) -> CgUnitary:
    return complete_to_unitary(build_cg_symmetric(d, k))


def clear_caches() -> None:
    build_cg_symmetric.cache_clear()
    completed_symmetric.cache_clear()
