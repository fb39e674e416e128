# Cascade kernels.  Set SCHURPRESS_DISABLE_NUMBA=1 to force the numpy path.

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_DISABLED = os.environ.get("SCHURPRESS_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}
HAVE_NUMBA = numba is not None


def cascade_step_numpy(v, phi, src, coef):
    """out[r] = sum_i coef[r, i] * v[src[r, i]] * phi[i] over entries with src >= 0."""
    mask = src >= 0
    gathered = v[np.where(mask, src, 0)]
    return np.einsum("ri,ri,i->r", np.where(mask, coef, 0.0), gathered, phi)


def _cascade_step_loop(v, phi, src, coef):
    rows, d = src.shape
    out = np.zeros(rows, dtype=np.complex128)
    for r in range(rows):
        acc = 0j
        for i in range(d):
            s = src[r, i]
            if s >= 0:
                acc += coef[r, i] * v[s] * phi[i]
        out[r] = acc
    return out


if HAVE_NUMBA:
    cascade_step_numba = numba.njit(cache=True, nogil=True)(_cascade_step_loop)
else:  # pragma: no cover
    cascade_step_numba = None

BACKENDS = {"numpy": cascade_step_numpy}
if cascade_step_numba is not None:
    BACKENDS["numba"] = cascade_step_numba

DEFAULT_BACKEND = "numba" if HAVE_NUMBA and not NUMBA_DISABLED else "numpy"


def get_step(backend=None):
    name = backend or DEFAULT_BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(BACKENDS)}") from None


def adjoint_step(u, src, coef, n_in):
    """Apply W^dagger to the rows of ``u`` (shape (rows, R)) giving shape (cols_in, d, R).

    Each input column (c, i) is hit by exactly one output row, so this is a scatter.
    """
    d = src.shape[1]
    out = np.zeros((n_in, d) + u.shape[1:], dtype=np.complex128)
    for i in range(d):
        hit = src[:, i] >= 0
        out[src[hit, i], i] = np.conj(coef[hit, i])[:, None] * u[hit]
    return out


def warm_up():
    """Trigger JIT compilation (or load it from the on-disk cache)."""
    src = np.zeros((1, 1), dtype=np.int64)
    coef = np.ones((1, 1))
    v = np.ones(1, dtype=np.complex128)
    phi = v.copy()
    for step in BACKENDS.values():
        step(v, phi, src, coef)
        # cached tables and qudit amplitudes are read-only, a separate numba signature
        for a in (phi, src, coef):
            a.setflags(write=False)
        step(v, phi, src, coef)
        for a in (phi, src, coef):
            a.setflags(write=True)
