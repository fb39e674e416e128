"""Reduced Wigner coefficients for coupling a U(d) irrep with the defining irrep.

The coefficient links input rows ``(top, nxt)`` at levels d and d-1 to output rows
``(top + e_j, nxt + e_j')``, with ``j' = 0`` meaning the level-(d-1) row is unchanged.
All products run over their own bound index; they are evaluated exactly in integers
and only the final ratio is taken in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .combinatorics import Partition, interlaces

__all__ = [
    "InvalidCombination",
    "WignerContext",
    "reduced_wigner",
    "shifted_weight",
    "sign_s",
    "wigner_coefficient",
]


class InvalidCombination(ValueError):
    """The (rows, j, j') combination has no reduced Wigner coefficient."""


def shifted_weight(mu: Sequence[int], k: int, s: int) -> int:
    """``mu[k] + s - k`` for the level-s row ``mu`` (1-based ``k``)."""
    if not 1 <= k <= s:
        raise ValueError(f"need 1 <= k <= s, got k={k}, s={s}")
    if len(mu) < s:
        raise ValueError(f"level-{s} row needs {s} entries, got {len(mu)}")
    return int(mu[k - 1]) + s - k


def sign_s(x: int) -> int:
    """+1 for positive ``x``, -1 otherwise (zero included)."""
    return 1 if x > 0 else -1


def _sign_nonneg(x: int) -> int:
    return 1 if x >= 0 else -1


@dataclass(frozen=True)
class WignerContext:
    top_row: Partition
    next_row: Partition
    j: int
    j_prime: int

    def __post_init__(self):
        top = Partition(self.top_row)
        nxt = Partition(self.next_row)
        object.__setattr__(self, "top_row", top)
        object.__setattr__(self, "next_row", nxt)
        d = len(top)
        if d < 2 or len(nxt) != d - 1:
            raise ValueError(f"need rows of lengths d >= 2 and d-1, got {len(top)} and {len(nxt)}")
        if not interlaces(nxt, top):
            raise InvalidCombination(f"{list(nxt)} does not interlace {list(top)}")
        if not 1 <= self.j <= d:
            raise ValueError(f"j={self.j} out of range 1..{d}")
        if not 0 <= self.j_prime <= d - 1:
            raise ValueError(f"j'={self.j_prime} out of range 0..{d - 1}")
        if top.add_box(self.j) is None:
            raise InvalidCombination(f"{list(top)} + e_{self.j} is not a partition")
        if self.j_prime and nxt.add_box(self.j_prime) is None:
            raise InvalidCombination(f"{list(nxt)} + e_{self.j_prime} is not a partition")

    @property
    def d(self) -> int:
        return len(self.top_row)


@lru_cache(maxsize=1 << 16)
def wigner_coefficient(top: tuple[int, ...], nxt: tuple[int, ...], j: int, j_prime: int,
                       literal_signs: bool = False) -> float:
    """Unchecked evaluation of the coefficient on plain tuples.

    With ``literal_signs`` the prefactor treats a zero argument as negative. That
    choice does not give a unitary transform (the symmetric block of a pair of
    qubits comes out antisymmetric); the default treats zero as positive.
    """
    d = len(top)
    sign = sign_s if literal_signs else _sign_nonneg
    mt = [shifted_weight(top, t, d) for t in range(1, d + 1)]
    mn = [shifted_weight(nxt, s, d - 1) for s in range(1, d)]
    J = j - 1
    if j_prime == 0:
        num = math.prod(mt[J] - mn[s] for s in range(d - 1))
        den = math.prod(mt[J] - mt[t] for t in range(d) if t != J)
        prefactor = sign(d - j)
    else:
        P = j_prime - 1
        num = (math.prod(mt[J] - mn[s] for s in range(d - 1) if s != P)
               * math.prod(mn[P] - mt[t] + 1 for t in range(d) if t != J))
        den = (math.prod(mn[P] - mn[s] + 1 for s in range(d - 1) if s != P)
               * math.prod(mt[J] - mt[t] for t in range(d) if t != J))
        prefactor = sign(j_prime - j)
    if den == 0:
        raise InvalidCombination(f"zero denominator for top={top}, next={nxt}, j={j}, j'={j_prime}")
    if num * den < 0:
        raise InvalidCombination(f"negative radicand for top={top}, next={nxt}, j={j}, j'={j_prime}")
    return prefactor * math.sqrt(num / den)


def reduced_wigner(ctx: WignerContext, *, literal_signs: bool = False) -> float:
    return wigner_coefficient(tuple(ctx.top_row), tuple(ctx.next_row), ctx.j, ctx.j_prime,
                              literal_signs)
