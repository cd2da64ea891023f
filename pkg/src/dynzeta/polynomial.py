"""Dense univariate polynomials over Q, just enough for spectral questions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .series import as_fraction


@dataclass(frozen=True)
class Polynomial:
    """Coefficients from the constant term upward; the zero polynomial is ``()``."""

    coeffs: tuple

    def __post_init__(self):
        c = [as_fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Polynomial:
        p = cls((1,))
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(as_fraction(other) * c for c in self.coeffs))
        if not self or not other:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 1)
        inv_lead = 1 / other.lead
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lead
            if c:
                quot[k - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * y
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dq]))

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> Polynomial:
        if not self:
            return self
        return self * (1 / self.lead)

    def __repr__(self):
        if not self:
            return "Polynomial(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
                mag = abs(c)
                body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
                terms.append(("-" if c < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return f"Polynomial({s})"


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero only when both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: Polynomial) -> list:
    """Yun's algorithm: monic squarefree, pairwise coprime f_k with p ~ prod f_k^k.

    Returns (f_k, k) pairs with non-constant f_k.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    out = []
    a = gcd(p, p.derivative())
    b = p // a
    c = p.derivative() // a
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = gcd(b, d)
        if g.degree > 0:
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out


def sturm_chain(p: Polynomial) -> list:
    chain = [p, p.derivative()]
    while chain[-1]:
        r = -(chain[-2] % chain[-1])
        if not r:
            break
        chain.append(r)
    return [q for q in chain if q]


def _variations(signs: Iterable) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _signs_at(chain: list, x) -> list:
    if x == "-inf":
        return [_sign(q.lead) * (-1) ** q.degree for q in chain]
    if x == "+inf":
        return [_sign(q.lead) for q in chain]
    return [_sign(q(x)) for q in chain]


def count_distinct_roots(p: Polynomial, lo, hi) -> int:
    """Distinct real roots of a squarefree p in the open interval (lo, hi).

    Endpoints may be ``"-inf"``/``"+inf"``; finite endpoints must not be roots.
    """
    chain = sturm_chain(p)
    return _variations(_signs_at(chain, lo)) - _variations(_signs_at(chain, hi))


def count_roots(p: Polynomial, lo, hi) -> int:
    """Real roots of p in (lo, hi) counted with multiplicity."""
    return sum(k * count_distinct_roots(f, lo, hi) for f, k in squarefree_decomposition(p))


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Polynomial:
    """Phi_d from x^d - 1 = prod_{e | d} Phi_e."""
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    p = Polynomial((-1,) + (0,) * (d - 1) + (1,))
    for e in range(1, d):
        if d % e == 0:
            q, r = divmod(p, cyclotomic(e))
            assert not r
            p = q
    return p
