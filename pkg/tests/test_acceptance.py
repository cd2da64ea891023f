"""The ten acceptance criteria, each at exact equality and within its time budget.

Every test records a verdict that the conftest hook prints as one PASS/FAIL
line per criterion at the end of the run.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from dynzeta import TruncatedSeries
from dynzeta.series import inverse, mul
from dynzeta.spectral import (
    RationalMatrix,
    admissibility_order,
    commutativity_witness,
    index_sequence_of_matrix,
    lecalvez_zeta,
    linear_zeta,
    macdonald_series,
    matrix_zeta,
    orbit_zeta_iterate,
    spectral_class,
)
from dynzeta.transforms import (
    dold_check,
    dold_coefficients,
    indices_from_dold,
    indices_from_sp_compositions,
    indices_from_sp_recurrence,
    linear_coefficient_of_iterate,
    sp_from_indices_compositions,
    sp_from_indices_recurrence,
)
from dynzeta.verify import random_admissible_matrix, random_fractional_monic, random_integer_matrix, random_series
from dynzeta.zeta import expand_factors, factorize, is_integral, zeta_from_indices

from conftest import ACCEPTANCE


class Criterion:
    """Context manager that times a block and records its verdict."""

    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.failures = []

    def check(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        seconds = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if seconds >= self.budget:
            self.failures.append(f"took {seconds:.2f}s, budget {self.budget}s")
        detail = "; ".join(map(str, self.failures[:3]))
        ACCEPTANCE[self.number] = (not self.failures, self.title, seconds, detail)
        if exc is None:
            assert not self.failures, detail
        return False


ORDER = 32


def geometric(sign, power, order):
    """1 / (1 - sign t^power)."""
    return inverse(TruncatedSeries.one(order) - sign * TruncatedSeries.monomial(power, order))


def one_minus(power, order):
    return TruncatedSeries.one(order) - TruncatedSeries.monomial(power, order)


# one matrix per class, plus a second non-diagonal representative
REPRESENTATIVES = {
    (0, 0): [RationalMatrix.zeros(1), RationalMatrix(((Fraction(1, 2), 1), (0, Fraction(-1, 3))))],
    (0, 1): [RationalMatrix.diag(2), RationalMatrix(((2, 1), (1, 1)))],
    (1, 0): [RationalMatrix.diag(-2), RationalMatrix(((-3, 1), (0, Fraction(1, 2))))],
    (1, 1): [RationalMatrix.diag(-2, 2), RationalMatrix(((0, 3), (3, 0)))],
}


def test_01_linear_table():
    t = ORDER
    zeta_f = {
        (0, 0): geometric(1, 1, t),
        (0, 1): one_minus(1, t),
        (1, 0): mul(geometric(1, 1, t), one_minus(2, t)),
        (1, 1): mul(one_minus(1, t), geometric(1, 2, t)),
    }
    closed_form = {(1, 0): TruncatedSeries.from_coeffs((1, 1), t), (1, 1): geometric(-1, 1, t)}
    zeta_f2 = {(0, 0): geometric(1, 1, t), (0, 1): one_minus(1, t), (1, 0): one_minus(1, t), (1, 1): geometric(1, 1, t)}
    zeta1_f = {(0, 0): (1, 1), (0, 1): (1, -1), (1, 0): (1, 1), (1, 1): (1, -1)}
    zeta1_f2 = {(0, 0): (1, 1), (0, 1): (1, -1), (1, 0): (1, -1), (1, 1): (1, 1)}
    with Criterion(1, "linear zeta table incl. zeta(f^2) and mod t^2 columns", 1.0) as c:
        for cls, expected in zeta_f.items():
            z = linear_zeta(cls, t)
            c.check(z.order == t and z == expected, f"zeta(f) for {cls}")
            if cls in closed_form:
                c.check(z == closed_form[cls], f"closed form for {cls}")
            c.check(z.truncate(1).coeffs == zeta1_f[cls], f"zeta_1(f) for {cls}")
            for A in REPRESENTATIVES[cls]:
                c.check(spectral_class(A) == cls, f"class of {A.rows}")
                c.check(matrix_zeta(A, t) == expected, f"matrix zeta of {A.rows}")
                A2 = A @ A
                z2 = linear_zeta(spectral_class(A2), t)
                c.check(z2 == zeta_f2[cls] and matrix_zeta(A2, t) == zeta_f2[cls], f"zeta(f^2) for {cls}")
                c.check(z2.truncate(1).coeffs == zeta1_f2[cls], f"zeta_1(f^2) for {cls}")
                # zeta(f^k) = zeta(f) for odd k, zeta(f^2) for even k
                for k in range(3, 7):
                    want = zeta_f[cls] if k % 2 else zeta_f2[cls]
                    c.check(matrix_zeta(A ** k, 12) == want, f"zeta(f^{k}) for {cls}")
        # the pairs (zeta_1(f), zeta_1(f^2)) tell the four classes apart
        c.check(len({(zeta1_f[k], zeta1_f2[k]) for k in zeta_f}) == 4, "mod t^2 pairs not distinct")


def _admissible_matrices():
    rng = random.Random("acceptance:two-path")
    return [random_admissible_matrix(rng, 16) for _ in range(200)]


@pytest.fixture(scope="module")
def admissible_matrices():
    return _admissible_matrices()


def test_02_two_path():
    with Criterion(2, "two-path agreement on 200 admissible matrices at order 16", 30.0) as c:
        mats = _admissible_matrices()
        c.check(len(mats) >= 200, "too few matrices")
        for A in mats:
            c.check(A.dim <= 4 and all(-5 <= x <= 5 and x.denominator == 1 for r in A.rows for x in r),
                    f"generator contract broken by {A.rows}")
            c.check(admissibility_order(A, 16) >= 16, f"not admissible: {A.rows}")
            lhs = zeta_from_indices(index_sequence_of_matrix(A, 16))
            rhs = linear_zeta(spectral_class(A), 16)
            c.check(lhs.order == 16 and lhs == rhs, f"two paths differ on {A.rows}")


def test_03_dold(admissible_matrices):
    with Criterion(3, "Dold congruences and Moebius reconstruction", 5.0) as c:
        for A in admissible_matrices:
            i = index_sequence_of_matrix(A, 16)
            c.check(dold_check(i).passed, f"Dold fails on {A.rows}")
            c.check(indices_from_dold(dold_coefficients(i)) == i, f"reconstruction fails on {A.rows}")
        control = dold_check([1] + [0] * 15)
        c.check(not control.passed and control.first_violation == (2, Fraction(-1, 2)),
                f"negative control gave {control}")


def test_04_iterate_linear_terms():
    with Criterion(4, "linear term of zeta(f^k) for m, k <= 8, |a|, |b| <= 3", 5.0) as c:
        for m in range(1, 9):
            for k in range(1, 9):
                for a in range(-3, 4):
                    for b in range(-3, 4):
                        z = orbit_zeta_iterate(m, a, b, k, 2)
                        # the t coefficient of a zeta function is i(f^k)
                        expected = linear_coefficient_of_iterate([(m, a, b)], k)
                        c.check(z.coeffs[1] == expected, (m, a, b, k))
                        if k % m:
                            c.check(z.coeffs[1] == 0, f"expected no fixed points for {(m, a, b, k)}")


def test_05_conversions():
    rng = random.Random("acceptance:conversions")
    with Criterion(5, "i <-> s: recurrence vs composition oracle, n <= 12", 60.0) as c:
        for _ in range(100):
            i = [rng.randint(-5, 5) for _ in range(12)]
            s = sp_from_indices_recurrence(i)
            for n in range(1, 13):
                c.check(sp_from_indices_compositions(i, n) == s[n - 1], ("s", i, n))
            c.check(indices_from_sp_recurrence(s) == i, ("roundtrip", i))
            s2 = [rng.randint(-5, 5) for _ in range(12)]
            i2 = indices_from_sp_recurrence(s2)
            for n in range(1, 13):
                c.check(indices_from_sp_compositions(s2, n) == i2[n - 1], ("i", s2, n))


def test_06_macdonald():
    with Criterion(6, "Macdonald series for chi in -3..5 at order 24", 1.0) as c:
        for chi in range(-3, 6):
            z = macdonald_series(chi, 24)
            c.check(z.order == 24 and z == zeta_from_indices([chi] * 24), chi)
            if chi > 0:
                c.check(all(z.coeffs[n] == math.comb(chi + n - 1, n) for n in range(25)), ("binomial", chi))


def test_07_factorization():
    rng = random.Random("acceptance:factorize")
    with Criterion(7, "factorize/expand roundtrip and integrality on 200 series", 10.0) as c:
        integer_seen = fractional_seen = 0
        for j in range(200):
            if j % 2:
                z = random_fractional_monic(rng, 24)
            else:
                z = random_series(rng, 24, monic=True, integer=True)
            f = factorize(z)
            c.check(expand_factors(f, 24) == z, ("roundtrip", j))
            c.check(f.is_integral() == z.is_integer(), ("integrality", j))
            c.check(bool(is_integral(z)) == z.is_integer(), ("is_integral", j))
            integer_seen += z.is_integer()
            fractional_seen += not z.is_integer()
        c.check(integer_seen == 100 and fractional_seen == 100, "sample split is not half and half")


def test_08_lecalvez():
    with Criterion(8, "Le Calvez polynomials of degree rq - 1 at order 32", 1.0) as c:
        for q in range(1, 7):
            for r in range(1, 5):
                z = lecalvez_zeta(q, r, 32)
                c.check(z.order == 32 and z.degree() == r * q - 1, (q, r, z.degree()))
                c.check(all(x == 0 for x in z.coeffs[r * q:]), (q, r))


def test_09_commutativity():
    rng = random.Random("acceptance:commutativity")
    with Criterion(9, "zeta(AB) = zeta(BA) on 100 rectangular pairs", 30.0) as c:
        pairs = 0
        while pairs < 100:
            d, d2 = rng.sample(range(1, 5), 2)
            A = random_integer_matrix(rng, d, d2)
            B = random_integer_matrix(rng, d2, d)
            if admissibility_order(A @ B, 16) < 16:
                continue
            pairs += 1
            v = commutativity_witness(A, B, 16)
            c.check(v.passed and v.zeta_ab == v.zeta_ba and v.class_ab == v.class_ba, (A.rows, B.rows))


def test_10_admissibility():
    with Criterion(10, "admissibility orders of the rotation and of -1", 1.0) as c:
        c.check(admissibility_order(RationalMatrix(((0, -1), (1, 0))), 10) == 3, "rotation")
        c.check(admissibility_order(RationalMatrix(((-1,),)), 10) == 1, "[[-1]]")
        # only the mod t^2 part exists for [[-1]]
        c.check(matrix_zeta(RationalMatrix(((-1,),)), 1) == TruncatedSeries.from_coeffs((1, 1), 1), "mod t^2")
