"""Zeta functions of hyperbolic linear maps and periodic-orbit tables.

A linear map A with no eigenvalue a root of unity has the origin as its only
periodic point, and its zeta function depends only on the parities

    sigma- = #{eigenvalues in (-inf, -1)} mod 2
    sigma+ = #{eigenvalues in (1, +inf)}  mod 2

counted with multiplicity.  Two independent routes produce it here: the
closed form per class (:func:`linear_zeta`) and the Lefschetz series of the
local indices sign det(I - A^k) (:func:`matrix_zeta`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DomainError, NonAdmissibleError
from .polynomial import Polynomial, count_roots, cyclotomic, gcd
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    as_fraction,
    binomial_factor,
    mul,
    substitute_tk,
)
from .transforms import OrbitCount, _as_orbits
from .zeta import zeta_from_indices

BELOW = "(-inf,-1)"
ABOVE = "(1,+inf)"
_INTERVALS = {BELOW: ("-inf", -1), ABOVE: (1, "+inf")}


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class RationalMatrix:
    """Exact matrix with Fraction entries; rectangular shapes are allowed."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DomainError("matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DomainError("matrix rows have different lengths")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, d: int) -> RationalMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def zeros(cls, d: int, d2: int | None = None) -> RationalMatrix:
        return cls(tuple((0,) * (d if d2 is None else d2) for _ in range(d)))

    @classmethod
    def diag(cls, *entries) -> RationalMatrix:
        d = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def shape(self) -> tuple:
        return len(self.rows), len(self.rows[0])

    @property
    def dim(self) -> int:
        self._require_square()
        return len(self.rows)

    def _require_square(self):
        n, m = self.shape
        if n != m:
            raise DomainError(f"square matrix required, got {n}x{m}")

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise DomainError(f"cannot multiply {n}x{k} by {k2}x{m}")
        cols = list(zip(*other.rows))
        return RationalMatrix(tuple(
            tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols)
            for r in self.rows
        ))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise DomainError("shape mismatch")
        return RationalMatrix(tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __pow__(self, k: int) -> RationalMatrix:
        self._require_square()
        if k < 0:
            raise DomainError("negative matrix powers are not supported")
        out = RationalMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self.rows[i][i] for i in range(self.dim)), Fraction(0))


def determinant(A: RationalMatrix) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Rows are first cleared of denominators so the elimination runs on ints.
    """
    n = A.dim
    scale = 1
    M = []
    for r in A.rows:
        den = math.lcm(*(x.denominator for x in r))
        scale *= den
        M.append([x.numerator * (den // x.denominator) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for p in range(k + 1, n):
                if M[p][k]:
                    M[k], M[p] = M[p], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * piv - M[i][k] * M[k][j]) // prev
        prev = piv
    return Fraction(sign * M[n - 1][n - 1], scale)


def char_poly(A: RationalMatrix) -> Polynomial:
    """det(xI - A) by the Faddeev-LeVerrier recurrence."""
    n = A.dim
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    M = RationalMatrix.zeros(n)
    for k in range(1, n + 1):
        AM = A @ M
        M = RationalMatrix(tuple(
            tuple(AM.rows[i][j] + (c[n - k + 1] if i == j else 0) for j in range(n))
            for i in range(n)
        ))
        c[n - k] = -(A @ M).trace() / k
    return Polynomial(tuple(c))


# -- spectrum ----------------------------------------------------------------

def real_root_count(p: Polynomial, interval: str) -> int:
    """Roots of p in (-inf,-1) or (1,+inf), counted with multiplicity.

    An eigenvalue at +1 or -1 makes the spectrum non-admissible.
    """
    if interval not in _INTERVALS:
        raise DomainError(f"interval must be {BELOW!r} or {ABOVE!r}, got {interval!r}")
    if p(1) == 0:
        raise NonAdmissibleError("eigenvalue 1: not even 1-admissible", order=0)
    if p(-1) == 0:
        raise NonAdmissibleError("eigenvalue -1: admissible only up to order 1", order=1)
    lo, hi = _INTERVALS[interval]
    return count_roots(p, lo, hi)


class SpectralClass(NamedTuple):
    sigma_minus: int
    sigma_plus: int

    def __str__(self):
        return f"({self.sigma_minus},{self.sigma_plus})"


def spectral_class(A: RationalMatrix) -> SpectralClass:
    p = char_poly(A)
    return SpectralClass(real_root_count(p, BELOW) % 2, real_root_count(p, ABOVE) % 2)


def admissibility_order(A: RationalMatrix, n_max: int) -> int:
    """Largest n <= n_max such that no eigenvalue is a root of unity of order <= n.

    0 means an eigenvalue equal to 1.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    p = char_poly(A)
    for d in range(1, n_max + 1):
        if gcd(p, cyclotomic(d)).degree > 0:
            return d - 1
    return n_max


def is_admissible(A: RationalMatrix) -> bool:
    """True when no eigenvalue is a root of unity at all.

    A rational characteristic polynomial can only vanish at a primitive d-th
    root of unity if Phi_d divides it, which needs phi(d) <= dim; since
    phi(d) >= sqrt(d/2), checking d <= 2 dim^2 is exhaustive.
    """
    bound = 2 * A.dim ** 2
    return admissibility_order(A, bound) == bound


def linear_zeta(c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Closed form per spectral class.

    (0,0) -> 1/(1-t), (0,1) -> 1-t, (1,0) -> (1-t)^-1 (1-t^2) = 1+t,
    (1,1) -> (1-t) (1-t^2)^-1 = 1/(1+t).
    """
    c = SpectralClass(*c)
    if c not in ((0, 0), (0, 1), (1, 0), (1, 1)):
        raise DomainError(f"spectral class must have 0/1 entries, got {c}")
    if c == (0, 0):
        return binomial_factor(1, -1, order)
    if c == (0, 1):
        return binomial_factor(1, 1, order)
    if c == (1, 0):
        return mul(binomial_factor(1, -1, order), binomial_factor(2, 1, order))
    return mul(binomial_factor(1, 1, order), binomial_factor(2, -1, order))


def local_index(A: RationalMatrix, k: int = 1) -> int:
    """Fixed point index of A^k at the origin: sign det(I - A^k)."""
    if k < 1:
        raise DomainError(f"iterate must be positive, got {k}")
    det = determinant(RationalMatrix.identity(A.dim) - A ** k)
    if det == 0:
        raise NonAdmissibleError(f"det(I - A^{k}) = 0: not admissible at order {k}", order=k)
    return 1 if det > 0 else -1


def index_sequence_of_matrix(A: RationalMatrix, order: int = DEFAULT_ORDER) -> list:
    """(sign det(I - A^k)) for k = 1..order."""
    reached = admissibility_order(A, order)
    if reached < order:
        raise NonAdmissibleError(
            f"matrix is admissible only up to order {reached}, need {order}", order=reached + 1
        )
    I = RationalMatrix.identity(A.dim)
    out = []
    P = I
    for _ in range(order):
        P = P @ A
        det = determinant(I - P)
        out.append(1 if det > 0 else -1)
    return out


def matrix_zeta(A: RationalMatrix, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    return zeta_from_indices(index_sequence_of_matrix(A, order))


# -- orbit tables and axioms -------------------------------------------------

_CLASS_COUNTS = {(0, 0): (1, 0), (0, 1): (-1, 0), (1, 0): (1, -1), (1, 1): (-1, 1)}


@dataclass(frozen=True)
class OrbitTable:
    """Signed hyperbolic orbit counts (m, a_m, b_m), one record per period."""

    orbits: tuple = ()

    def __post_init__(self):
        orbits = tuple(sorted(_as_orbits(self.orbits)))
        periods = [o.m for o in orbits]
        if len(set(periods)) != len(periods):
            raise DomainError("orbit periods must be distinct; merge the counts first")
        object.__setattr__(self, "orbits", orbits)

    @classmethod
    def from_linearizations(cls, items: Iterable) -> OrbitTable:
        """Counts from concrete orbits ``(period m, A)``.

        The map acts by A at each point of the orbit, so its first-return
        derivative is A^m and the orbit's class is that of A^m.
        """
        totals: dict = {}
        for m, A in items:
            if m < 1:
                raise DomainError(f"orbit period must be positive, got {m}")
            R = A ** m
            if not is_admissible(R):
                raise NonAdmissibleError(f"return map of the period-{m} orbit has a root-of-unity eigenvalue")
            da, db = _CLASS_COUNTS[spectral_class(R)]
            a, b = totals.get(m, (0, 0))
            totals[m] = (a + da, b + db)
        return cls(tuple(OrbitCount(m, a, b) for m, (a, b) in totals.items()))


def orbit_zeta(orbits, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """prod_m (1 - t^m)^(-a_m) (1 - t^(2m))^(-b_m)."""
    out = TruncatedSeries.one(order)
    for o in _as_orbits(orbits):
        if o.m > order:
            raise DomainError(f"orbit period {o.m} exceeds working order {order}")
        out = mul(out, binomial_factor(o.m, -o.a, order))
        out = mul(out, binomial_factor(2 * o.m, -o.b, order))
    return out


def orbit_zeta_iterate(m: int, a: int, b: int, k: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """zeta(f^k) for a single family of period-m orbits with counts a, b."""
    if m < 1 or k < 1:
        raise DomainError("period and iterate must be positive")
    d = math.gcd(k, m)
    if (k // d) % 2:
        return mul(binomial_factor(m // d, -d * a, order), binomial_factor(2 * m // d, -d * b, order))
    return binomial_factor(m // d, -d * (a + 2 * b), order)


def iterate_zeta_axiom(z_on_component: TruncatedSeries, k: int, target_order: int) -> TruncatedSeries:
    """zeta(f, U)(t) = zeta(f^k on U_1)(t^k) when f cycles k components."""
    return substitute_tk(z_on_component, k, target_order)


def multiplicative_assemble(parts: Sequence, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Zeta of a disjoint union: the product of the parts' zeta functions.

    ``order`` only matters for the empty product.
    """
    if not parts:
        return TruncatedSeries.one(order)
    out = parts[0]
    for p in parts[1:]:
        out = mul(out, p)
    return out


def macdonald_series(chi: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generating series of chi(SP_n X): (1 - t)^(-chi)."""
    return binomial_factor(1, -chi, order)


def lecalvez_zeta(q: int, r: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Local zeta (1 - t)^-1 (1 - t^q)^r of an isolated surface fixed point."""
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    return mul(binomial_factor(1, -1, order), binomial_factor(q, r, order))


class CommutativityVerdict(NamedTuple):
    passed: bool
    zeta_ab: TruncatedSeries
    zeta_ba: TruncatedSeries
    class_ab: SpectralClass
    class_ba: SpectralClass

    def to_json(self) -> dict:
        from .jsonio import series_to_json

        return {
            "pass": self.passed,
            "zeta_ab": series_to_json(self.zeta_ab),
            "zeta_ba": series_to_json(self.zeta_ba),
            "class_ab": list(self.class_ab),
            "class_ba": list(self.class_ba),
        }


def commutativity_witness(A: RationalMatrix, B: RationalMatrix, order: int = DEFAULT_ORDER) -> CommutativityVerdict:
    """Compare the zeta functions of AB and BA for A (d x d') and B (d' x d)."""
    if A.shape != tuple(reversed(B.shape)):
        raise DomainError(f"shapes {A.shape} and {B.shape} do not compose both ways")
    AB, BA = A @ B, B @ A
    zab = matrix_zeta(AB, order)
    zba = matrix_zeta(BA, order)
    cab, cba = spectral_class(AB), spectral_class(BA)
    same = zab == zba and cab == cba and zab == linear_zeta(cab, order)
    return CommutativityVerdict(same, zab, zba, cab, cba)
