"""Exact truncated power series over the rationals.

A :class:`TruncatedSeries` of order N stores c_0..c_N and stands for the
class of a power series modulo t^(N+1).  Binary operations on series of
different orders return a result at the smaller order, and equality compares
coefficients only up to the smaller order.

Monic series (c_0 = 1) form a group under multiplication; operations that
need that group check the constant term and raise :class:`DomainError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import DomainError, PrecisionError

DEFAULT_ORDER = 32

Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a canonical Fraction.

    Floats are refused: they would silently carry a rounding.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> TruncatedSeries:
        """Build a series from leading coefficients, zero-padded or cut to ``order``."""
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, power: int, order: int = DEFAULT_ORDER, coeff: Scalar = 1) -> TruncatedSeries:
        """``coeff * t**power`` truncated at ``order`` (vanishes if power > order)."""
        c = [0] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(tuple(c))

    # -- inspection ---------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} is outside 0..{self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise PrecisionError(f"cannot raise precision from {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def degree(self) -> int | None:
        """Index of the last non-zero retained coefficient, None for zero."""
        for n in range(self.order, -1, -1):
            if self.coeffs[n]:
                return n
        return None

    # -- equality in the quotient ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    # agreement up to the smaller order is not transitive
    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({format_series(self)}, order={self.order})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return add(self, -other)

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(self, other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        return power(self, e)


def format_series(z: TruncatedSeries, var: str = "t") -> str:
    terms = []
    for n, c in enumerate(z.coeffs):
        if not c:
            continue
        mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1)))


def scale(a: TruncatedSeries, c: Scalar) -> TruncatedSeries:
    c = as_fraction(c)
    return TruncatedSeries(tuple(c * x for x in a.coeffs))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients of a: factor series are very sparse
    support = [(i, ac[i]) for i in range(n + 1) if ac[i]]
    out = [Fraction(0)] * (n + 1)
    for i, x in support:
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def require_monic(a: TruncatedSeries, what: str = "series") -> None:
    if not a.is_monic:
        raise DomainError(f"{what} must have constant term 1, got {a.coeffs[0]}")


def inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a monic series.

    b_0 = 1 and b_n = -sum_{i=1..n} a_i b_{n-i}.
    """
    require_monic(a)
    ac = a.coeffs
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = Fraction(0)
        for i in range(1, n + 1):
            if ac[i]:
                s += ac[i] * b[n - i]
        b.append(-s)
    return TruncatedSeries(tuple(b))


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """Integer power by repeated squaring; negative e needs a monic base."""
    if e < 0:
        return power(inverse(a), -e)
    result = TruncatedSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def substitute_tk(z: TruncatedSeries, k: int, target_order: int) -> TruncatedSeries:
    """Map z(t) mod t^(m+1) to z(t^k) mod t^(n+1).

    Well defined only for n <= k*m, where m = z.order.
    """
    if k < 1:
        raise DomainError(f"substitution power must be positive, got {k}")
    if target_order < 0:
        raise DomainError("target order must be non-negative")
    if target_order > k * z.order:
        raise PrecisionError(
            f"z(t^{k}) mod t^{target_order + 1} needs z to order "
            f"{-(-target_order // k)}, have {z.order}"
        )
    out = [Fraction(0)] * (target_order + 1)
    for j in range(target_order // k + 1):
        out[j * k] = z.coeffs[j]
    return TruncatedSeries(tuple(out))


def binomial_factor(n: int, e, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expansion of (1 - t^n)^e up to t^order.

    Integer exponents expand the polynomial exactly, negative ones through
    the series inverse.  A rational exponent uses the generalised binomial
    series, which agrees with exp(e*log(1 - t^n)).
    """
    if n < 1:
        raise DomainError(f"factor index must be positive, got {n}")
    e = as_fraction(e)
    if e.denominator == 1:
        e = e.numerator
        if e < 0:
            return inverse(binomial_factor(n, -e, order))
        out = [0] * (order + 1)
        for j in range(min(e, order // n) + 1):
            out[j * n] = (-1) ** j * math.comb(e, j)
        return TruncatedSeries(tuple(out))
    out = [Fraction(0)] * (order + 1)
    c = Fraction(1)
    for j in range(order // n + 1):
        out[j * n] = c
        # C(e, j+1)(-1)^(j+1) from C(e, j)(-1)^j
        c = -c * (e - j) / (j + 1)
    return TruncatedSeries(tuple(out))
