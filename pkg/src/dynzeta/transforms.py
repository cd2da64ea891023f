"""Conversions between the encodings of a dynamical zeta function.

Four sequences carry the same information about an admissible pair:

* fixed point indices i_n of the iterates f^n,
* indices s_n of the symmetric products SP_n(f) (the zeta coefficients, s_0 = 1),
* Dold coefficients a_k with i_n = sum_{k | n} k a_k,
* factor exponents e_l with zeta = prod (1 - t^l)^(e_l), so e_l = -a_l.

The convolution recurrences are the production path.  The composition sums
enumerate 2^(n-1) terms and exist as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import ConsistencyError, DomainError, SizeLimitError
from .series import as_fraction
from .zeta import FactorExponents

COMPOSITION_CAP = 20


# -- compositions ------------------------------------------------------------

def compositions_of(n: int) -> list:
    """All compositions of n as tuples, in lexicographic order."""
    return list(_compositions(_check_cap(n)))


def _check_cap(n: int) -> int:
    if n < 1:
        raise DomainError(f"compositions need n >= 1, got {n}")
    if n > COMPOSITION_CAP:
        raise SizeLimitError(f"n = {n} exceeds the composition cap {COMPOSITION_CAP}")
    return n


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple:
    out = []
    # a composition is a choice of cut points among the n - 1 gaps
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            bounds = (0,) + cuts + (n,)
            out.append(tuple(bounds[j + 1] - bounds[j] for j in range(len(bounds) - 1)))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _exp_weights(n: int) -> tuple:
    # (C, 1 / (pi(C) |C|!))
    return tuple((c, Fraction(1, math.prod(c) * math.factorial(len(c)))) for c in _compositions(n))


@lru_cache(maxsize=None)
def _log_weights(n: int) -> tuple:
    # (C, (-1)^(|C|+1) / |C|)
    return tuple((c, Fraction((-1) ** (len(c) + 1), len(c))) for c in _compositions(n))


def _pi(seq: Sequence, parts: tuple):
    out = 1
    for c in parts:
        out *= seq[c - 1]
    return out


# -- i <-> s -----------------------------------------------------------------

def sp_from_indices_recurrence(indices: Sequence) -> list:
    """s_1..s_N from i_1..i_N via (n+1) s_{n+1} = sum_{j=0..n} s_{n-j} i_{j+1}."""
    i = [as_fraction(v) for v in indices]
    s = [Fraction(1)]
    for n in range(len(i)):
        total = sum((s[n - j] * i[j] for j in range(n + 1)), Fraction(0))
        s.append(total / (n + 1))
    return s[1:]


def indices_from_sp_recurrence(sp: Sequence) -> list:
    """i_1..i_N from s_1..s_N via i_{n+1} = (n+1) s_{n+1} - sum_{j<n} s_{n-j} i_{j+1}."""
    s = [Fraction(1)] + [as_fraction(v) for v in sp]
    i = []
    for n in range(len(sp)):
        acc = (n + 1) * s[n + 1]
        for j in range(n):
            acc -= s[n - j] * i[j]
        i.append(acc)
    return i


def sp_from_indices_compositions(indices: Sequence, n: int) -> Fraction:
    """s_n = sum over compositions C of n of pi(i, C) / (pi(C) |C|!)."""
    _check_cap(n)
    if len(indices) < n:
        raise DomainError(f"need i_1..i_{n}, have {len(indices)} values")
    i = [as_fraction(v) for v in indices[:n]]
    return sum((w * _pi(i, c) for c, w in _exp_weights(n)), Fraction(0))


def indices_from_sp_compositions(sp: Sequence, n: int) -> Fraction:
    """i_n = n * sum over compositions C of n of (-1)^(|C|+1) pi(s, C) / |C|.

    The composition sum is the t^n coefficient of log(1 + sum s_k t^k),
    and i_n is n times that coefficient.
    """
    _check_cap(n)
    if len(sp) < n:
        raise DomainError(f"need s_1..s_{n}, have {len(sp)} values")
    s = [as_fraction(v) for v in sp[:n]]
    return n * sum((w * _pi(s, c) for c, w in _log_weights(n)), Fraction(0))


# -- Moebius / Dold ----------------------------------------------------------

def divisors(n: int) -> list:
    if n < 1:
        raise DomainError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError(f"mobius needs n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class DoldCoefficients:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    @property
    def integral(self) -> tuple:
        return tuple(v.denominator == 1 for v in self.values)

    def first_violation(self) -> tuple | None:
        for k, v in enumerate(self.values, start=1):
            if v.denominator != 1:
                return k, v
        return None


def dold_coefficients(indices: Sequence) -> DoldCoefficients:
    """a_k = (1/k) sum_{d | k} mu(k/d) i_d, never rounded."""
    i = [as_fraction(v) for v in indices]
    a = []
    for k in range(1, len(i) + 1):
        total = sum((mobius(k // d) * i[d - 1] for d in divisors(k)), Fraction(0))
        a.append(total / k)
    return DoldCoefficients(tuple(a))


def indices_from_dold(coeffs) -> list:
    """i_n = sum_{k | n} k a_k."""
    a = coeffs.values if isinstance(coeffs, DoldCoefficients) else [as_fraction(v) for v in coeffs]
    return [sum((k * a[k - 1] for k in divisors(n)), Fraction(0)) for n in range(1, len(a) + 1)]


class DoldVerdict(NamedTuple):
    passed: bool
    first_violation: tuple | None  # (k, a_k) for the first fractional a_k

    def to_json(self) -> dict:
        v = None
        if self.first_violation is not None:
            k, value = self.first_violation
            v = {"k": k, "value": f"{value.numerator}/{value.denominator}"}
        return {"pass": self.passed, "first_violation": v}


def dold_check(indices: Sequence) -> DoldVerdict:
    bad = dold_coefficients(indices).first_violation()
    return DoldVerdict(bad is None, bad)


# -- orbit tables ------------------------------------------------------------

class OrbitCount(NamedTuple):
    """Signed counts of hyperbolic m-periodic orbits.

    a = #(0,0) - #(0,1) + #(1,0) - #(1,1) and b = -#(1,0) + #(1,1), where
    the class (sigma-, sigma+) belongs to the derivative of f^m along the orbit.
    """

    m: int
    a: int
    b: int


def _as_orbits(orbits) -> list:
    out = []
    for o in getattr(orbits, "orbits", orbits):
        o = OrbitCount(*o) if not isinstance(o, OrbitCount) else o
        if o.m < 1:
            raise DomainError(f"orbit period must be positive, got {o.m}")
        out.append(o)
    return out


def exponents_from_orbit_counts(orbits: Iterable, order: int) -> FactorExponents:
    """Exponents of zeta = prod_m (1 - t^m)^(-a_m) (1 - t^(2m))^(-b_m).

    e_l = -a_l for odd l and -(a_l + b_{l/2}) for even l; indices above
    ``order`` are dropped.
    """
    e = {}
    for o in _as_orbits(orbits):
        if o.m > order:
            raise DomainError(f"orbit period {o.m} exceeds working order {order}")
        e[o.m] = e.get(o.m, 0) - o.a
        if 2 * o.m <= order:
            e[2 * o.m] = e.get(2 * o.m, 0) - o.b
    return FactorExponents(e, order)


def linear_coefficient_of_iterate(orbits: Iterable, k: int) -> int:
    """Fixed point index i(f^k), the t-coefficient of zeta(f^k).

    Computed twice: by the per-orbit case split on m | k and the parity of
    k/m, and as -sum_{l | k} l e_l over the factor exponents.  A mismatch
    raises :class:`ConsistencyError`.
    """
    if k < 1:
        raise DomainError(f"iterate must be positive, got {k}")
    orbits = _as_orbits(orbits)
    by_cases = 0
    for o in orbits:
        if k % o.m == 0:
            if (k // o.m) % 2:
                by_cases += o.m * o.a
            else:
                by_cases += o.m * (o.a + 2 * o.b)
    e = {}
    for o in orbits:
        e[o.m] = e.get(o.m, 0) - o.a
        e[2 * o.m] = e.get(2 * o.m, 0) - o.b
    by_exponents = -sum(l * e.get(l, 0) for l in divisors(k))
    if by_cases != by_exponents:
        raise ConsistencyError(
            f"linear coefficient of zeta(f^{k}): case split gives {by_cases}, "
            f"exponent sum gives {by_exponents}"
        )
    return by_cases
