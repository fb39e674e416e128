"""State containers shared by the compressor, the oracle and the file layer."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .combinatorics import dim_symmetric


class UnnormalizedState(ValueError):
    pass


def _complex_vector(values) -> np.ndarray:
    arr = np.array(values, dtype=np.complex128).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PureQudit:
    """Single-qudit amplitudes ``alpha_1..alpha_d`` on ``|0>..|d-1>``."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _complex_vector(self.amplitudes)
        if amps.size == 0:
            raise ValueError("a qudit needs at least one amplitude")
        err = abs(np.vdot(amps, amps).real - 1.0)
        if err > 1e-12:
            raise UnnormalizedState(f"qudit norm deviates from 1 by {err:.3g}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, values) -> "PureQudit":
        amps = np.array(values, dtype=np.complex128).reshape(-1)
        return cls(amps / np.linalg.norm(amps))

    @property
    def d(self) -> int:
        return self.amplitudes.size


@dataclass(frozen=True, eq=False)
class CompressedState:
    """Amplitudes over occupation vectors of weight ``n`` in canonical order.

    Output of :func:`compress` has unit norm; the symmetric block returned by the dense
    path carries ``1 - leakage``.
    """

    d: int
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _complex_vector(self.amplitudes)
        expected = dim_symmetric(self.n, self.d)
        if amps.size != expected:
            raise ValueError(f"expected {expected} amplitudes for n={self.n}, d={self.d}, got {amps.size}")
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True, eq=False)
class DenseState:
    """Amplitudes over the full ``d**n`` computational basis, ``i_1`` most significant."""

    d: int
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _complex_vector(self.amplitudes)
        if amps.size != self.d**self.n:
            raise ValueError(f"expected {self.d ** self.n} amplitudes, got {amps.size}")
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def tensor(self) -> np.ndarray:
        """View as an n-axis array of shape ``(d,) * n``."""
        return self.amplitudes.reshape((self.d,) * self.n)


def as_qudit(phi) -> PureQudit:
    return phi if isinstance(phi, PureQudit) else PureQudit(phi)


def fidelity(a, b) -> float:
    """``|<a|b>|`` for two state objects or plain vectors."""
    va = getattr(a, "amplitudes", a)
    vb = getattr(b, "amplitudes", b)
    return float(abs(np.vdot(va, vb)))
