"""Elliptic modular forms as exact q-expansions.

A QSeries is a weight-labelled truncated power series in q with Fraction
coefficients, indexed 0..prec. Products truncate to the smaller precision of
the two factors; all arithmetic is exact.

The level-1 generators are normalized with constant term 1:
eisenstein_q(k) = 1 - (2k/B_k) * sum sigma_{k-1}(n) q^n, and the weight-12
cusp form delta_q = (eisenstein_q(4)^3 - eisenstein_q(6)^2) / 1728 carries
the tau coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import bernoulli, sigma

__all__ = [
    "DEFAULT_PREC",
    "QSeries",
    "delta_q",
    "eisenstein_q",
    "express_in_e4_e6",
    "tau",
    "tau_star",
]

DEFAULT_PREC = 64


@dataclass(frozen=True)
class QSeries:
    """Truncated q-expansion of a (formal) modular form of the given weight."""

    weight: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
        )
        if not self.coeffs:
            raise ValueError("QSeries: need at least the constant coefficient")

    @property
    def prec(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.prec:
            raise IndexError(f"coefficient q^{n} beyond precision {self.prec}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise ValueError("truncate: cannot extend precision")
        return QSeries(self.weight, self.coeffs[: prec + 1])

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.weight != other.weight:
            raise ValueError(
                f"weight mismatch in sum: {self.weight} vs {other.weight}"
            )
        p = min(self.prec, other.prec)
        return QSeries(
            self.weight,
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(p + 1)),
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            p = min(self.prec, other.prec)
            out = [Fraction(0)] * (p + 1)
            for i in range(p + 1):
                a = self.coeffs[i]
                if a:
                    for j in range(p + 1 - i):
                        b = other.coeffs[j]
                        if b:
                            out[i + j] += a * b
            return QSeries(self.weight + other.weight, tuple(out))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, c) -> "QSeries":
        c = Fraction(c)
        return QSeries(self.weight, tuple(c * x for x in self.coeffs))


def eisenstein_q(k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Weight-k level-1 Eisenstein series, constant term 1."""
    if k < 4 or k % 2:
        raise ValueError(f"eisenstein_q: weight must be even and >= 4, got {k}")
    c = Fraction(-2 * k) / bernoulli(k)
    return QSeries(
        k, (Fraction(1),) + tuple(c * sigma(k - 1, n) for n in range(1, prec + 1))
    )


def _int_eisenstein(k: int, prec: int) -> list[int]:
    c = Fraction(-2 * k) / bernoulli(k)
    assert c.denominator == 1
    ci = c.numerator
    return [1] + [ci * sigma(k - 1, n) for n in range(1, prec + 1)]


def _int_mul(a: list[int], b: list[int], prec: int) -> list[int]:
    out = [0] * (prec + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(min(len(b), prec - i + 1)):
                if b[j]:
                    out[i + j] += ai * b[j]
    return out


# tau coefficients, grown on demand: _tau_ints[n] = tau(n), index 0 unused (0).
_tau_ints: list[int] = [0]


def _ensure_tau(n: int) -> None:
    if n < len(_tau_ints):
        return
    prec = max(2 * (len(_tau_ints) - 1), n, DEFAULT_PREC)
    e4 = _int_eisenstein(4, prec)
    e6 = _int_eisenstein(6, prec)
    e4cu = _int_mul(_int_mul(e4, e4, prec), e4, prec)
    e6sq = _int_mul(e6, e6, prec)
    del _tau_ints[1:]
    for i in range(1, prec + 1):
        num = e4cu[i] - e6sq[i]
        assert num % 1728 == 0
        _tau_ints.append(num // 1728)


def tau(n: int) -> int:
    """Coefficient of q^n in the weight-12 cusp form delta_q; tau(0) = 0."""
    if n < 0:
        raise ValueError("tau: index must be >= 0")
    if n == 0:
        return 0
    _ensure_tau(n)
    return _tau_ints[n]


def tau_star(ell: int) -> int:
    """tau(ell) - 2^12 * tau(ell/4), the level-4 twist of tau; 0 at ell = 0."""
    if ell < 0:
        raise ValueError("tau_star: index must be >= 0")
    value = tau(ell)
    if ell % 4 == 0 and ell > 0:
        value -= 4096 * tau(ell // 4)
    return value


def delta_q(prec: int = DEFAULT_PREC) -> QSeries:
    """The normalized weight-12 cusp form, coefficients tau(n)."""
    _ensure_tau(prec)
    return QSeries(12, tuple(Fraction(tau(n)) for n in range(prec + 1)))


def _monomial_pairs(k: int) -> list[tuple[int, int]]:
    pairs = []
    for b in range(k // 6 + 1):
        rem = k - 6 * b
        if rem >= 0 and rem % 4 == 0:
            pairs.append((rem // 4, b))
    pairs.sort(key=lambda ab: (-ab[0], ab[1]))
    return pairs


def express_in_e4_e6(f: QSeries) -> dict[tuple[int, int], Fraction]:
    """Write f as a polynomial in the weight-4 and weight-6 generators.

    Returns {(a, b): c} with f = sum c * E4^a * E6^b over exponents
    4a + 6b = weight(f); zero coefficients are dropped. The linear system is
    solved exactly from the first dim-many q-coefficients and the remaining
    coefficients are checked against the result; any residual mismatch (f not
    in the span at this weight) raises ValueError, as does insufficient
    precision.
    """
    k = f.weight
    pairs = _monomial_pairs(k) if k >= 0 and k % 2 == 0 else []
    if not pairs:
        if f.is_zero():
            return {}
        raise ValueError(f"no monomials in weights 4 and 6 have weight {k}")
    d = len(pairs)
    if f.prec < d - 1:
        raise ValueError(
            f"need at least {d - 1} q-coefficients beyond the constant, "
            f"have {f.prec}"
        )
    prec = f.prec
    e4 = eisenstein_q(4, prec) if k >= 4 else None
    e6 = eisenstein_q(6, prec) if k >= 6 else None
    one = QSeries(0, (Fraction(1),) + (Fraction(0),) * prec)
    basis = []
    for a, b in pairs:
        mon = one
        for _ in range(a):
            mon = mon * e4
        for _ in range(b):
            mon = mon * e6
        basis.append(mon)
    # exact Gaussian elimination on the leading d x d coefficient matrix
    mat = [[basis[j].coeff(i) for j in range(d)] + [f.coeff(i)] for i in range(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if mat[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular coefficient system")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for r in range(d):
            if r != col and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
    sol = [mat[i][d] for i in range(d)]
    for n in range(prec + 1):
        recon = sum(sol[j] * basis[j].coeff(n) for j in range(d))
        if recon != f.coeff(n):
            raise ValueError(
                f"residual mismatch at q^{n}: series is not in the "
                "polynomial span of the weight-4 and weight-6 generators"
            )
    return {pairs[j]: sol[j] for j in range(d) if sol[j] != 0}
