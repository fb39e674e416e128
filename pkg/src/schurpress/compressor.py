"""Compression of ``|phi>^n`` onto the symmetric irrep by a cascade of CG transforms.

Fast path: only the ``Q_[k]`` block vector is carried, step ``k`` costs
``O(d * dim_symmetric(k+1, d))``.  Dense path: the same cascade applied as completed
unitaries on the full ``d**n`` register, used for validation.
"""

from __future__ import annotations

import math
from typing import Iterator

import numpy as np

from . import _kernels
from .cg import build_cg_symmetric, completed_symmetric
from .combinatorics import INT64_MAX, DimensionOverflow, ScaleError, dim_symmetric
from .states import CompressedState, DenseState, PureQudit, as_qudit

DENSE_MAX_D = 3
DENSE_MAX_N = 6


def iter_cascade(phi, n: int, backend: str | None = None) -> Iterator[np.ndarray]:
    """Yield ``v_1, ..., v_n`` where ``v_{k+1} = W_k (v_k (x) phi)``."""
    phi = as_qudit(phi)
    if n < 1:
        raise ValueError("n must be >= 1")
    d = phi.d
    dim_symmetric(n, d)
    step = _kernels.get_step(backend)
    v = np.array(phi.amplitudes)
    yield v
    for k in range(1, n):
        w = build_cg_symmetric(d, k)
        v = step(v, phi.amplitudes, w.src, w.coef)
        yield v


def compress(phi, n: int, backend: str | None = None) -> CompressedState:
    """Compress ``n`` copies of ``phi`` into ``dim_symmetric(n, d)`` amplitudes."""
    phi = as_qudit(phi)
    for v in iter_cascade(phi, n, backend):
        pass
    return CompressedState(phi.d, n, v)


def _check_dense_scale(d: int, n: int) -> None:
    if d > DENSE_MAX_D or n > DENSE_MAX_N:
        raise ScaleError(f"dense path is capped at d <= {DENSE_MAX_D}, n <= {DENSE_MAX_N}")


def compress_dense(psi: DenseState) -> tuple[CompressedState, float]:
    """Run the cascade as unitaries on the whole register.

    The register of the first ``k`` qudits keeps the ``Q_[k]`` coordinates in its leading
    ``dim_symmetric(k, d)`` rows; everything else is carried along untouched.  Returns
    the ``Q_[n]`` block and the squared norm left outside it.
    """
    d, n = psi.d, psi.n
    _check_dense_scale(d, n)
    reg = psi.amplitudes.reshape(d, d ** (n - 1)).copy()
    for k in range(1, n):
        tower = dim_symmetric(k, d)
        rest = reg.shape[1] // d
        u = completed_symmetric(d, k).matrix
        coupled = u @ reg[:tower].reshape(tower * d, rest)
        others = reg[tower:].reshape(-1, rest)
        reg = np.concatenate([coupled, others], axis=0)
    top = dim_symmetric(n, d)
    block = reg[:top, 0]
    leakage = float(np.vdot(reg[top:], reg[top:]).real)
    return CompressedState(d, n, block), leakage


def decompress(cs: CompressedState) -> DenseState:
    """Embed a compressed state back into the ``d**n`` register (adjoint cascade)."""
    d, n = cs.d, cs.n
    _check_dense_scale(d, n)
    u = np.array(cs.amplitudes).reshape(-1, 1)
    for k in range(n - 1, 0, -1):
        w = build_cg_symmetric(d, k)
        u = _kernels.adjoint_step(u, w.src, w.coef, dim_symmetric(k, d))
        u = u.reshape(u.shape[0], -1)
    return DenseState(d, n, u.reshape(-1))


def estimate_cost(n: int, d: int) -> int:
    """Upper-bound proxy ``(n-1) * (d-1) * dim_symmetric(n, d)`` for the cascade cost."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    value = (n - 1) * (d - 1) * math.comb(n + d - 1, d - 1)
    if value > INT64_MAX:
        raise DimensionOverflow(f"estimate_cost({n}, {d}) = {value} exceeds 64-bit range")
    return value


__all__ = [
    "PureQudit",
    "compress",
    "compress_dense",
    "decompress",
    "estimate_cost",
    "iter_cascade",
]
