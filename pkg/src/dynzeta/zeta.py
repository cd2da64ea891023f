"""Group structure of monic series and the Lefschetz zeta bridge.

exp and log are computed with the derivative recurrences

    n y_n = sum_{k=1..n} k x_k y_{n-k}            (y = exp x)
    n x_n = n y_n - sum_{k=1..n-1} k x_k y_{n-k}  (x = log y)

which follow from y' = x' y.  Both are exact over Q and quadratic in the order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DomainError
from .series import (
    TruncatedSeries,
    as_fraction,
    binomial_factor,
    mul,
    require_monic,
    scale,
)


def exp_series(x: TruncatedSeries) -> TruncatedSeries:
    if x.coeffs[0] != 0:
        raise DomainError(f"exp needs a zero constant term, got {x.coeffs[0]}")
    xc = x.coeffs
    kx = [k * xc[k] for k in range(x.order + 1)]
    y = [Fraction(1)]
    for n in range(1, x.order + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            if kx[k]:
                s += kx[k] * y[n - k]
        y.append(s / n)
    return TruncatedSeries(tuple(y))


def log_series(z: TruncatedSeries) -> TruncatedSeries:
    require_monic(z)
    zc = z.coeffs
    kx = [Fraction(0)]  # k * x_k
    for n in range(1, z.order + 1):
        s = n * zc[n]
        for k in range(1, n):
            if kx[k] and zc[n - k]:
                s -= kx[k] * zc[n - k]
        kx.append(s)
    return TruncatedSeries(tuple(kx[n] / n if n else kx[0] for n in range(z.order + 1)))


def pow_rational(z: TruncatedSeries, y) -> TruncatedSeries:
    """z**y := exp(y log z) for a monic z and rational y."""
    require_monic(z)
    y = as_fraction(y)
    if y == 0:
        return TruncatedSeries.one(z.order)
    if y == 1:
        return z
    return exp_series(scale(log_series(z), y))


@dataclass(frozen=True)
class FactorExponents:
    """Sparse exponents of z = prod_n (1 - t^n)^(e_n), valid up to t^max_index."""

    exponents: dict = field(default_factory=dict)
    max_index: int = 0

    def __post_init__(self):
        clean = {}
        for n, e in self.exponents.items():
            n = int(n)
            if n < 1:
                raise DomainError(f"factor index must be positive, got {n}")
            if n > self.max_index:
                raise DomainError(f"factor index {n} exceeds max_index {self.max_index}")
            e = as_fraction(e)
            if e:
                clean[n] = e
        object.__setattr__(self, "exponents", dict(sorted(clean.items())))

    def __getitem__(self, n: int) -> Fraction:
        return self.exponents.get(n, Fraction(0))

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.exponents.values())

    def as_list(self) -> list:
        """Dense list e_1..e_N."""
        return [self[n] for n in range(1, self.max_index + 1)]


def factorize(z: TruncatedSeries) -> FactorExponents:
    """Unique exponents e_m with z = prod (1 - t^m)^(e_m) mod t^(N+1).

    Works upward in degree: the lowest surviving coefficient c at t^m
    forces e_m = -c, and that factor is divided out before moving on.
    """
    require_monic(z)
    order = z.order
    rest = z
    exps = {}
    for m in range(1, order + 1):
        c = rest.coeffs[m]
        if c:
            exps[m] = -c
            rest = mul(rest, binomial_factor(m, c, order))
    return FactorExponents(exps, order)


def expand_factors(f: FactorExponents, order: int | None = None) -> TruncatedSeries:
    if order is None:
        order = f.max_index
    out = TruncatedSeries.one(order)
    for n, e in f.exponents.items():
        if n <= order:
            out = mul(out, binomial_factor(n, e, order))
    return out


class Integrality(NamedTuple):
    integral: bool
    first_fractional: int | None  # index of the first non-integer coefficient

    def __bool__(self):
        return self.integral


def is_integral(z: TruncatedSeries) -> Integrality:
    require_monic(z)
    for n, c in enumerate(z.coeffs):
        if c.denominator != 1:
            return Integrality(False, n)
    return Integrality(True, None)


def zeta_from_indices(indices: Sequence) -> TruncatedSeries:
    """Lefschetz zeta exp(sum_n i_n t^n / n) from i_1..i_N, at order N."""
    x = [Fraction(0)] + [as_fraction(i) / n for n, i in enumerate(indices, start=1)]
    return exp_series(TruncatedSeries(tuple(x)))


def indices_from_zeta(z: TruncatedSeries) -> list:
    """i_n = n [t^n] log z for n = 1..N.

    Values are Fractions; a series that does not come from an admissible
    pair may give non-integers (see :func:`all_integers`).
    """
    lg = log_series(z)
    return [n * lg.coeffs[n] for n in range(1, z.order + 1)]


def all_integers(values: Sequence) -> bool:
    return all(as_fraction(v).denominator == 1 for v in values)
