"""The named degree-2 forms over the Hurwitz order.

Eisenstein series are built directly from their singular series: the
coefficient at T != 0 is sum_{d | eps(T)} d^(k-1) * astar(two_det(T)/d^2),
where eps is the content of T. The distinguished cusp forms in weights 10,
12 and 14 are exact rational combinations of Eisenstein series, normalized
so their coefficient at T_0 = (1, 1, (1, 1, 0, 0)) equals 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactnum import bernoulli, divisors, sigma
from .fexp import FourierExpansion
from .series import tau_star
from .tmat import TMatrix, ZERO_TMATRIX, enumerate_psd

__all__ = [
    "build_form",
    "eisenstein_h",
    "g_constant",
    "g_h",
    "maass_lift",
    "monomial_h",
    "x10",
    "x12",
    "x14",
    "x14_closed",
]


def _check_weight(k: int) -> None:
    if k < 4 or k % 2:
        raise ValueError(f"weight must be even and >= 4, got {k}")


def maass_lift(
    astar: Callable[[int], Fraction],
    k: int,
    N: int,
    constant=Fraction(0),
) -> FourierExpansion:
    """Expansion with a(T) = sum_{d | eps(T)} d^(k-1) astar(two_det(T)/d^2).

    astar must be defined for all integers 0 <= l <= 2*N^2. The formula says
    nothing about T = 0, so the constant term is a separate argument.
    """
    _check_weight(k)
    memo: dict[int, Fraction] = {}

    def a_of(ell: int) -> Fraction:
        v = memo.get(ell)
        if v is None:
            v = memo[ell] = Fraction(astar(ell))
        return v

    coeffs: dict[TMatrix, Fraction] = {}
    for T in enumerate_psd(N):
        if T == ZERO_TMATRIX:
            v = Fraction(constant)
        else:
            td = T.two_det()
            v = sum(
                d ** (k - 1) * a_of(td // (d * d)) for d in divisors(T.epsilon())
            )
        if v:
            coeffs[T] = v
    return FourierExpansion(k, N, coeffs)


def _eis_astar(k: int) -> Callable[[int], Fraction]:
    c0 = Fraction(-2 * k) / bernoulli(k)
    cpos = Fraction(-4 * k * (k - 2)) / (
        (2 ** (k - 2) - 1) * bernoulli(k) * bernoulli(k - 2)
    )
    twist = 2 ** (k - 2)

    def astar(ell: int) -> Fraction:
        if ell == 0:
            return c0
        return cpos * (
            sigma(k - 3, ell) - twist * sigma(k - 3, Fraction(ell, 4))
        )

    return astar


@lru_cache(maxsize=None)
def eisenstein_h(k: int, N: int) -> FourierExpansion:
    """The weight-k Eisenstein series, constant term 1."""
    _check_weight(k)
    return maass_lift(_eis_astar(k), k, N, constant=Fraction(1))


def g_constant(k: int) -> Fraction:
    """Normalizing scalar putting the weight-k Eisenstein series on the
    integral singular series sigma_{k-3}(l) - 2^(k-2) sigma_{k-3}(l/4)."""
    _check_weight(k)
    return Fraction(-(2 ** (k - 2) - 1)) * bernoulli(k) * bernoulli(k - 2) / (
        4 * k * (k - 2)
    )


@lru_cache(maxsize=None)
def g_h(k: int, N: int) -> FourierExpansion:
    """The renormalized Eisenstein series g_constant(k) * eisenstein_h(k, N).

    Its coefficient at any T with eps(T) = 1 and two_det(T) = l > 0 is the
    integer sigma_{k-3}(l) - 2^(k-2) sigma_{k-3}(l/4)."""
    return eisenstein_h(k, N).scale(g_constant(k))


@lru_cache(maxsize=None)
def monomial_h(a: int, b: int, N: int) -> FourierExpansion:
    """Product of a copies of the weight-4 and b copies of the weight-6
    Eisenstein series (the weight-(4a+6b) monomial basis of chi builds)."""
    if a < 0 or b < 0:
        raise ValueError("monomial exponents must be >= 0")
    if a:
        return monomial_h(a - 1, b, N) * eisenstein_h(4, N)
    if b:
        return monomial_h(0, b - 1, N) * eisenstein_h(6, N)
    return FourierExpansion.constant(1, N)


@lru_cache(maxsize=None)
def x10(N: int) -> FourierExpansion:
    """Weight-10 cusp form, coefficient 1 at T_0 = (1, 1, (1, 1, 0, 0))."""
    diff = monomial_h(1, 1, N) - eisenstein_h(10, N)
    return diff.scale(Fraction(17, 161280))


@lru_cache(maxsize=None)
def x12(N: int) -> FourierExpansion:
    """Weight-12 cusp form, coefficient 1 at T_0."""
    comb = (
        monomial_h(3, 0, N).scale(Fraction(441, 691))
        + monomial_h(0, 2, N).scale(Fraction(250, 691))
        - eisenstein_h(12, N)
    )
    return comb.scale(Fraction(21421, 203212800))


@lru_cache(maxsize=None)
def x14(N: int) -> FourierExpansion:
    """Weight-14 cusp form: the weight-4 Eisenstein series times x10."""
    return eisenstein_h(4, N) * x10(N)


def x14_closed(T: TMatrix) -> int:
    """Closed form for the weight-14 cusp coefficient at a rank-2 index:
    sum_{d | eps(T)} d^13 tau_star(two_det(T)/d^2)."""
    if T.rank() != 2:
        raise ValueError(f"closed form needs rank 2, got {T}")
    td = T.two_det()
    return sum(d**13 * tau_star(td // (d * d)) for d in divisors(T.epsilon()))


_FORM_RE = re.compile(r"([EG])(\d+)H", re.IGNORECASE)


def build_form(name: str, N: int) -> FourierExpansion:
    """Build a named form at depth N: X10, X12, X14, E<k>H or G<k>H."""
    key = name.strip().upper()
    if key == "X10":
        return x10(N)
    if key == "X12":
        return x12(N)
    if key == "X14":
        return x14(N)
    m = _FORM_RE.fullmatch(key)
    if m:
        k = int(m.group(2))
        _check_weight(k)
        return eisenstein_h(k, N) if m.group(1) == "E" else g_h(k, N)
    raise ValueError(
        f"unknown form {name!r}: expected X10, X12, X14, E<k>H or G<k>H"
    )
