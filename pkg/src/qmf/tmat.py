"""Half-integral index matrices for degree-2 Fourier expansions.

A TMatrix (n, m, t) stands for the hermitian 2x2 matrix [[n, t/2], [conj(t)/2, m]]
with n, m integers and t in the dual of the Hurwitz order. Its determinant is
n*m - norm(t)/4, a half-integer; we work throughout with the integer invariant

    two_det(T) = 2*det(T) = 2*n*m - norm(t)/2,

which is what every coefficient formula in this package is indexed by.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .exactnum import divisors
from .quatlat import ZERO_QUAT, QuatCoord, enumerate_dual, parse_quat

__all__ = ["TMatrix", "ZERO_TMATRIX", "enumerate_psd", "parse_tmatrix"]


class TMatrix(NamedTuple):
    n: int
    m: int
    t: QuatCoord

    def two_det(self) -> int:
        return 2 * self.n * self.m - self.t.norm() // 2

    def is_psd(self) -> bool:
        """Positive semidefiniteness over the rationals.

        Requires n, m, two_det >= 0, and additionally t = 0 whenever a
        diagonal entry vanishes (a singular row forces the whole row to 0).
        """
        if self.n < 0 or self.m < 0 or self.two_det() < 0:
            return False
        if (self.n == 0 or self.m == 0) and self.t != ZERO_QUAT:
            return False
        return True

    def rank(self) -> int:
        """Matrix rank (0, 1 or 2); defined for psd T only."""
        if not self.is_psd():
            raise ValueError(f"rank: {self} is not positive semidefinite")
        if self.two_det() > 0:
            return 2
        if self.n == 0 and self.m == 0 and self.t == ZERO_QUAT:
            return 0
        return 1

    def epsilon(self) -> int:
        """Content of T: the largest d >= 1 with d | n, d | m and t/d still dual.

        Defined for T != 0 only.
        """
        if self == ZERO_TMATRIX:
            raise ValueError("epsilon: undefined for the zero matrix")
        a, b, c, d = self.t
        g = gcd(self.n, self.m, a, b, c, d)
        for div in reversed(divisors(g)):
            if QuatCoord(a // div, b // div, c // div, d // div).in_dual():
                return div
        raise AssertionError("unreachable: 1 always divides")

    def __str__(self) -> str:
        return f"{self.n},{self.m},{self.t}"


ZERO_TMATRIX = TMatrix(0, 0, ZERO_QUAT)


def parse_tmatrix(text: str) -> TMatrix:
    """Parse 'n,m,a,b,c,d' into a TMatrix; rejects t outside the dual lattice."""
    parts = text.split(",")
    if len(parts) != 6:
        raise ValueError(f"expected 6 comma-separated integers, got {text!r}")
    try:
        vals = [int(p.strip()) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
    t = QuatCoord(*vals[2:])
    if not t.in_dual():
        raise ValueError(
            f"off-diagonal part {t} is not in the dual lattice "
            "(coordinate sum must be even)"
        )
    return TMatrix(vals[0], vals[1], t)


@lru_cache(maxsize=None)
def _dual_upto(R: int) -> tuple[QuatCoord, ...]:
    return tuple(enumerate_dual(R))


@lru_cache(maxsize=None)
def enumerate_psd(N: int) -> tuple[TMatrix, ...]:
    """All psd index matrices with n <= N and m <= N, in (n, m, t) lex order.

    For n*m > 0 the psd condition is exactly norm(t) <= 4*n*m, so each block
    is a dual-lattice ball; for n*m = 0 it forces t = 0.
    """
    if N < 0:
        raise ValueError("enumerate_psd: depth must be >= 0")
    out: list[TMatrix] = []
    for n in range(N + 1):
        for m in range(N + 1):
            if n == 0 or m == 0:
                out.append(TMatrix(n, m, ZERO_QUAT))
            else:
                out.extend(TMatrix(n, m, t) for t in _dual_upto(4 * n * m))
    return tuple(out)
