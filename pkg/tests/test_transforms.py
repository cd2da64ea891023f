from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, strategies as st

from dynzeta import ConsistencyError, DomainError, SizeLimitError
from dynzeta.transforms import (
    OrbitCount,
    compositions_of,
    divisors,
    dold_check,
    dold_coefficients,
    exponents_from_orbit_counts,
    indices_from_dold,
    indices_from_sp_compositions,
    indices_from_sp_recurrence,
    linear_coefficient_of_iterate,
    mobius,
    sp_from_indices_compositions,
    sp_from_indices_recurrence,
)
from dynzeta.spectral import orbit_zeta
from dynzeta.zeta import expand_factors, indices_from_zeta, zeta_from_indices

from conftest import S, T, sympy_series

int_seqs = st.lists(st.integers(-5, 5), min_size=1, max_size=10)


def brute_compositions(n):
    return sorted(c for k in range(1, n + 1) for c in product(range(1, n + 1), repeat=k) if sum(c) == n)


class TestCompositions:
    def test_one(self):
        assert compositions_of(1) == [(1,)]

    def test_three(self):
        assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]

    def test_five_count(self):
        assert len(compositions_of(5)) == 16

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_brute_force(self, n):
        comps = compositions_of(n)
        assert comps == brute_compositions(n)
        assert len(set(comps)) == 2 ** (n - 1)

    def test_cap(self):
        assert len(compositions_of(20)) == 2 ** 19
        with pytest.raises(SizeLimitError):
            compositions_of(21)

    def test_non_positive(self):
        with pytest.raises(DomainError):
            compositions_of(0)


class TestSymmetricProductIndices:
    def test_constant_map(self):
        assert sp_from_indices_recurrence([1] * 6) == [1] * 6

    def test_euler_characteristic_two(self):
        assert sp_from_indices_recurrence([2] * 6) == [2, 3, 4, 5, 6, 7]

    def test_minus_ones(self):
        assert sp_from_indices_recurrence([-1] * 5) == [-1, 0, 0, 0, 0]

    def test_compositions_constant(self):
        assert sp_from_indices_compositions([1, 1, 1], 3) == 1

    def test_compositions_single(self):
        assert sp_from_indices_compositions([7], 1) == 7

    def test_compositions_two(self):
        # {1,1}: 4 / (1 * 2!) = 2, {2}: 2 / (2 * 1!) = 1
        assert sp_from_indices_compositions([2, 2], 2) == 3

    def test_inverse_constant(self):
        assert indices_from_sp_recurrence([1] * 6) == [1] * 6

    def test_inverse_zero(self):
        assert indices_from_sp_recurrence([0] * 4) == [0] * 4

    def test_inverse_minus_one(self):
        assert indices_from_sp_recurrence([-1, 0, 0, 0, 0]) == [-1] * 5

    def test_log_compositions_constant(self):
        assert indices_from_sp_compositions([1, 1], 2) == 1

    def test_log_compositions_single(self):
        assert indices_from_sp_compositions([5], 1) == 5

    def test_log_compositions_two(self):
        # n * ({1,1}: -4/2, {2}: 3) = 2 * 1
        assert indices_from_sp_compositions([2, 3], 2) == 2
        assert indices_from_sp_recurrence([2, 3]) == [2, 2]

    def test_compositions_cap(self):
        with pytest.raises(SizeLimitError):
            sp_from_indices_compositions([1] * 21, 21)

    def test_short_sequence(self):
        with pytest.raises(DomainError):
            sp_from_indices_compositions([1, 2], 3)

    @given(int_seqs)
    def test_recurrence_matches_zeta_coefficients(self, i):
        # independent route: exp of the log-derivative series
        assert sp_from_indices_recurrence(i) == list(zeta_from_indices(i).coeffs[1:])

    @given(int_seqs)
    def test_oracle_equivalence_forward(self, i):
        s = sp_from_indices_recurrence(i)
        assert [sp_from_indices_compositions(i, n) for n in range(1, len(i) + 1)] == s

    @given(int_seqs)
    def test_oracle_equivalence_backward(self, s):
        i = indices_from_sp_recurrence(s)
        assert [indices_from_sp_compositions(s, n) for n in range(1, len(s) + 1)] == i

    @given(int_seqs)
    def test_roundtrip(self, i):
        assert indices_from_sp_recurrence(sp_from_indices_recurrence(i)) == i

    @given(st.lists(st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3)), min_size=1, max_size=8))
    def test_rational_sequences(self, i):
        s = sp_from_indices_recurrence(i)
        assert indices_from_sp_recurrence(s) == i
        assert sp_from_indices_compositions(i, len(i)) == s[-1]

    def test_dold_sequences_give_integer_sp(self):
        i = [2 ** n for n in range(1, 11)]
        assert dold_check(i).passed
        assert all(v.denominator == 1 for v in sp_from_indices_recurrence(i))

    def test_non_dold_sequence_gives_fractional_sp(self):
        # exp(t^2 / 2) = 1 + t^2/2 + ...
        assert sp_from_indices_recurrence([0, 1])[1] == Fraction(1, 2)


class TestMobius:
    @pytest.mark.parametrize("n,mu", [(1, 1), (4, 0), (30, -1)])
    def test_examples(self, n, mu):
        assert mobius(n) == mu

    @pytest.mark.parametrize("n", range(1, 200))
    def test_against_sympy(self, n):
        assert mobius(n) == sympy.mobius(n)

    @pytest.mark.parametrize("n", range(1, 100))
    def test_divisors(self, n):
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]

    @pytest.mark.parametrize("n", range(2, 60))
    def test_sum_over_divisors_vanishes(self, n):
        assert sum(mobius(d) for d in divisors(n)) == 0


def dold_brute(i):
    """Solve i_n = sum_{k|n} k a_k forward, one unknown at a time."""
    a = []
    for n in range(1, len(i) + 1):
        rest = sum(k * a[k - 1] for k in range(1, n) if n % k == 0)
        a.append(Fraction(i[n - 1] - rest, n))
    return a


class TestDold:
    def test_constant(self):
        assert dold_coefficients([1] * 6).values == (1, 0, 0, 0, 0, 0)

    def test_powers_of_two(self):
        a = dold_coefficients([2, 4, 8, 16]).values
        assert a == (2, 1, 2, 3)
        assert list(a) == dold_brute([2, 4, 8, 16])

    def test_minus_ones(self):
        assert dold_coefficients([-1] * 5).values == (-1, 0, 0, 0, 0)

    def test_check_pass(self):
        assert dold_check([1] * 8) == (True, None)

    def test_check_fail_witness(self):
        v = dold_check([1, 0, 0, 0])
        assert not v.passed
        assert v.first_violation == (2, Fraction(-1, 2))
        assert v.to_json() == {"pass": False, "first_violation": {"k": 2, "value": "-1/2"}}

    def test_check_pass_json(self):
        assert dold_check([2, 4, 8]).to_json() == {"pass": True, "first_violation": None}

    def test_flags(self):
        assert dold_coefficients([1, 0, 0]).integral == (True, False, False)

    @given(st.lists(st.integers(-20, 20), max_size=30))
    def test_matches_brute_force(self, i):
        assert list(dold_coefficients(i).values) == dold_brute(i)

    @given(st.lists(st.integers(-20, 20), max_size=30))
    def test_reconstruction(self, i):
        assert indices_from_dold(dold_coefficients(i)) == i

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=16))
    def test_zeta_of_integer_series_passes(self, coeffs):
        # any integer monic series is a product of integer factor powers,
        # so its index sequence satisfies the congruences
        z = S(1, *coeffs)
        assert dold_check(indices_from_zeta(z)).passed


class TestOrbitExponents:
    def test_single_fixed_point(self):
        assert exponents_from_orbit_counts([(1, 1, 0)], 8).exponents == {1: -1}

    def test_mixed(self):
        # one fixed point of class (1,1): zeta = (1 - t)(1 - t^2)^-1 = 1/(1 + t)
        e = exponents_from_orbit_counts([OrbitCount(1, -1, 1)], 8)
        assert e.exponents == {1: 1, 2: -1}
        assert expand_factors(e) == sympy_series(1 / (1 + T), 8)

    def test_period_two_b_term(self):
        # (1 - t^2)^-1 from b_1 = 1 alone
        e = exponents_from_orbit_counts([(1, 0, 1)], 6)
        assert e.exponents == {2: -1}
        assert expand_factors(e) == sympy_series(1 / (1 - T ** 2), 6)

    def test_empty(self):
        assert exponents_from_orbit_counts([], 5).exponents == {}

    def test_period_beyond_order(self):
        with pytest.raises(DomainError):
            exponents_from_orbit_counts([(9, 1, 0)], 8)

    def test_expand_matches_orbit_zeta(self):
        orbits = [(1, 2, -1), (3, -1, 2), (4, 1, 1)]
        assert expand_factors(exponents_from_orbit_counts(orbits, 16)) == orbit_zeta(orbits, 16)


class TestLinearCoefficient:
    def test_constant_map(self):
        assert linear_coefficient_of_iterate([(1, 1, 0)], 5) == 1

    def test_period_two_invisible(self):
        assert linear_coefficient_of_iterate([(2, 1, 0)], 1) == 0

    def test_period_two_at_two(self):
        assert linear_coefficient_of_iterate([(2, 1, 0)], 2) == 2

    @given(
        st.lists(st.tuples(st.integers(1, 8), st.integers(-3, 3), st.integers(-3, 3)), max_size=4),
        st.integers(1, 16),
    )
    def test_equals_index_of_iterate(self, orbits, k):
        # i(f^k) = k-th index of zeta(f)
        z = orbit_zeta(orbits, 2 * 16)
        assert linear_coefficient_of_iterate(orbits, k) == indices_from_zeta(z)[k - 1]

    def test_mismatch_is_a_hard_failure(self, monkeypatch):
        import dynzeta.transforms as tr

        monkeypatch.setattr(tr, "divisors", lambda n: [1])
        with pytest.raises(ConsistencyError):
            tr.linear_coefficient_of_iterate([(2, 1, 0)], 2)
