"""Brute-force references used only to check the compression path.

Nothing here touches the CG construction: states are built as explicit tensor
products and type-class sums over the full ``d**n`` space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

import numpy as np
from scipy.stats import unitary_group

from .combinatorics import ScaleError, occupation_table
from .states import CompressedState, DenseState, PureQudit, as_qudit

ORACLE_MAX_D = 4
ORACLE_MAX_N = 8


def _check_scale(d: int, n: int) -> None:
    if d > ORACLE_MAX_D or n > ORACLE_MAX_N:
        raise ScaleError(f"oracle dense states are capped at d <= {ORACLE_MAX_D}, n <= {ORACLE_MAX_N}")


@dataclass(frozen=True)
class Permutation:
    """Permutation of ``1..n`` given as the image list ``[s(1), ..., s(n)]``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise ValueError(f"{mapping} is not a permutation of 1..{len(mapping)}")
        object.__setattr__(self, "mapping", mapping)

    @property
    def n(self) -> int:
        return len(self.mapping)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, s in enumerate(self.mapping, start=1):
            inv[s - 1] = i
        return Permutation(tuple(inv))


def random_qudit(d: int, rng: np.random.Generator) -> PureQudit:
    """Complex Gaussian amplitudes, normalized."""
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureQudit.normalized(z)


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    return unitary_group.rvs(d, random_state=rng) if d > 1 else np.array([[np.exp(2j * np.pi * rng.random())]])


def tensor_power_state(phi, n: int) -> DenseState:
    phi = as_qudit(phi)
    _check_scale(phi.d, n)
    amps = reduce(np.kron, [phi.amplitudes] * n, np.ones(1, dtype=np.complex128))
    return DenseState(phi.d, n, amps)


def _multiset_permutations(letters: list[int]) -> Iterator[tuple[int, ...]]:
    """Distinct orderings of a multiset, each once."""
    if not letters:
        yield ()
        return
    for letter in sorted(set(letters)):
        rest = list(letters)
        rest.remove(letter)
        for tail in _multiset_permutations(rest):
            yield (letter,) + tail


def symmetric_basis_vector(c: Sequence[int], normalized: bool = True) -> DenseState:
    """Sum of all computational strings in which letter ``s`` occurs ``c[s]`` times."""
    c = tuple(int(x) for x in c)
    if not c or any(x < 0 for x in c):
        raise ValueError(f"invalid occupation {c}")
    d, n = len(c), sum(c)
    _check_scale(d, n)
    letters = [s for s, count in enumerate(c) for _ in range(count)]
    amps = np.zeros(d**n, dtype=np.complex128)
    for word in _multiset_permutations(letters):
        index = 0
        for letter in word:
            index = index * d + letter
        amps[index] += 1.0
    if normalized:
        amps /= np.linalg.norm(amps)
    return DenseState(d, n, amps)


def expected_compressed(phi, n: int) -> CompressedState:
    """Amplitude ``sqrt(n! / prod c_i!) * prod alpha_i**c_i`` per occupation ``c``."""
    phi = as_qudit(phi)
    d = phi.d
    occ = occupation_table(n, d)
    log_multinomial = math.lgamma(n + 1) - np.sum(
        [[math.lgamma(x + 1) for x in row] for row in occ], axis=1)
    powers = np.prod(np.power(phi.amplitudes[None, :], occ), axis=1)
    return CompressedState(d, n, np.exp(0.5 * log_multinomial) * powers)


def permutation_action(s: Permutation, psi: DenseState) -> DenseState:
    """``P(s)|i_1 ... i_n> = |i_{s^-1(1)} ... i_{s^-1(n)}>``."""
    if s.n != psi.n:
        raise ValueError(f"permutation of {s.n} points applied to {psi.n} qudits")
    axes = [x - 1 for x in s.inverse().mapping]
    return DenseState(psi.d, psi.n, np.transpose(psi.tensor(), axes).reshape(-1))


def tensor_unitary_action(u, psi: DenseState) -> DenseState:
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (psi.d, psi.d):
        raise ValueError(f"expected a {psi.d}x{psi.d} matrix, got {u.shape}")
    if np.abs(u.conj().T @ u - np.eye(psi.d)).max() > 1e-12:
        raise ValueError("matrix is not unitary")
    t = psi.tensor()
    for axis in range(psi.n):
        t = np.moveaxis(np.tensordot(u, t, axes=([1], [axis])), 0, axis)
    return DenseState(psi.d, psi.n, t.reshape(-1))


def spin_cg_closed_form(k: int, m: int, letter: int) -> float:
    """Spin-1/2 coupling coefficient onto the stretched branch ``J = k/2 + 1/2``.

    The input is the spin-``k/2`` state holding ``m`` copies of letter 1 (spin up),
    i.e. ``M = m - k/2``.  Letter 1 adds spin up, letter 2 spin down.
    """
    if not 0 <= m <= k:
        raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    j = k / 2
    mz = m - j
    if letter == 1:
        return math.sqrt((j + mz + 1) / (2 * j + 1))
    if letter == 2:
        return math.sqrt((j - mz + 1) / (2 * j + 1))
    raise ValueError(f"letter must be 1 or 2, got {letter}")
