"""Exact rational arithmetic and elementary number theory.

All arithmetic in this package is exact: rationals are `fractions.Fraction`
over Python's arbitrary-precision integers, and nothing here ever touches a
float (the sole exception is `math.inf`, returned by `ord_p` at zero so that
valuation comparisons like ``ord_p(x, p) >= 1`` behave uniformly).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, inf

__all__ = [
    "bernoulli",
    "divisors",
    "factorize",
    "is_prime",
    "kronecker",
    "ord_p",
    "sigma",
]


_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m, with the convention B_1 = -1/2.

    Computed by the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0 and
    memoized, so a call for B_m fills the table up to m.
    """
    if m < 0:
        raise ValueError("bernoulli: index must be >= 0")
    while len(_bernoulli_cache) <= m:
        n = len(_bernoulli_cache)
        acc = sum(
            comb(n + 1, j) * _bernoulli_cache[j] for j in range(n)
        )
        _bernoulli_cache.append(Fraction(-acc, n + 1))
    return _bernoulli_cache[m]


@cache
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n > 0, sorted ascending."""
    if n <= 0:
        raise ValueError("divisors: argument must be positive")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def sigma(m: int, ell) -> int:
    """Divisor power sum sigma_m(ell) = sum of d^m over d | ell.

    Returns 0 whenever ell is not a positive integer (in particular for the
    fractional arguments ell/4 that arise in level-4 coefficient formulas).
    """
    if isinstance(ell, Fraction):
        if ell.denominator != 1:
            return 0
        ell = ell.numerator
    if not isinstance(ell, int) or ell <= 0:
        return 0
    return sum(d**m for d in divisors(ell))


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a / n), defined for every pair of integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    r = 1
    if n < 0:
        n = -n
        if a < 0:
            r = -1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            r = -r
    # n now odd and positive: Jacobi symbol with quadratic reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                r = -r
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            r = -r
        a %= n
    return r if n == 1 else 0


def ord_p(x, p: int):
    """p-adic valuation of the rational x; returns math.inf for x = 0."""
    if not is_prime(p):
        raise ValueError(f"ord_p: modulus {p} is not prime")
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    num = x.numerator
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


# Deterministic Miller-Rabin witness set, complete for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n > 0 by trial division, as {prime: exponent}."""
    if n <= 0:
        raise ValueError("factorize: argument must be positive")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
