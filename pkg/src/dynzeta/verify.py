"""Seeded property suites covering the identities every module must satisfy.

Functions under test are looked up through their modules at call time
(``series.mul`` rather than a bound ``mul``), so a test can monkeypatch a
module attribute to inject a fault and watch the report go red.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, NamedTuple

from . import series, spectral, transforms, zeta
from .jsonio import fraction_to_str, matrix_to_json
from .polynomial import Polynomial
from .series import TruncatedSeries

ORACLE_CAP = 12


# -- generators --------------------------------------------------------------

def random_rational(rng: random.Random, size: int = 3, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, max_den))


def random_series(rng: random.Random, order: int, *, monic=False, integer=False, zero_const=False) -> TruncatedSeries:
    coeffs = [
        Fraction(rng.randint(-3, 3)) if integer else random_rational(rng)
        for _ in range(order + 1)
    ]
    if monic:
        coeffs[0] = Fraction(1)
    if zero_const:
        coeffs[0] = Fraction(0)
    return TruncatedSeries(tuple(coeffs))


def random_fractional_monic(rng: random.Random, order: int) -> TruncatedSeries:
    """A monic series guaranteed to have at least one non-integer coefficient."""
    while True:
        z = random_series(rng, order, monic=True)
        if order == 0 or not z.is_integer():
            return z


def random_integer_matrix(rng: random.Random, rows: int, cols: int, lo: int = -5, hi: int = 5) -> spectral.RationalMatrix:
    return spectral.RationalMatrix(tuple(tuple(rng.randint(lo, hi) for _ in range(cols)) for _ in range(rows)))


def random_admissible_matrix(rng: random.Random, order: int, max_dim: int = 4) -> spectral.RationalMatrix:
    """Square integer matrix, entries in [-5, 5], admissible up to ``order``.

    Admissibility up to 2 is always demanded so the spectral class exists.
    """
    need = max(order, 2)
    while True:
        d = rng.randint(1, max_dim)
        A = random_integer_matrix(rng, d, d)
        if spectral.admissibility_order(A, need) == need:
            return A


def random_composable_pair(rng: random.Random, order: int, max_dim: int = 4):
    """(A, B) of shapes d x d' and d' x d whose products are admissible up to ``order`` (and 2)."""
    need = max(order, 2)
    while True:
        d, d2 = rng.randint(1, max_dim), rng.randint(1, max_dim)
        A = random_integer_matrix(rng, d, d2)
        B = random_integer_matrix(rng, d2, d)
        if spectral.admissibility_order(A @ B, need) == need:
            return A, B


def random_orbit_table(rng: random.Random, order: int, max_orbits: int = 4) -> spectral.OrbitTable:
    periods = rng.sample(range(1, order + 1), min(order, rng.randint(0, max_orbits)))
    return spectral.OrbitTable(tuple(
        transforms.OrbitCount(m, rng.randint(-3, 3), rng.randint(-3, 3)) for m in periods
    ))


# -- properties --------------------------------------------------------------
# each check returns None on success or a JSON-able counterexample

def _s(z: TruncatedSeries) -> str:
    return series.format_series(z)


def p_inverse(rng, order):
    a = random_series(rng, order, monic=True)
    if series.mul(a, series.inverse(a)) != TruncatedSeries.one(order):
        return {"a": _s(a)}


def p_ring_laws(rng, order):
    a, b, c = (random_series(rng, order) for _ in range(3))
    mul, add = series.mul, series.add
    if add(a, b) != add(b, a) or mul(a, b) != mul(b, a):
        return {"law": "commutativity", "a": _s(a), "b": _s(b)}
    if add(add(a, b), c) != add(a, add(b, c)) or mul(mul(a, b), c) != mul(a, mul(b, c)):
        return {"law": "associativity", "a": _s(a), "b": _s(b), "c": _s(c)}


def p_substitute_homomorphism(rng, order):
    k = rng.randint(1, 4)
    a = random_series(rng, order, monic=True)
    b = random_series(rng, order, monic=True)
    sub = series.substitute_tk
    lhs = sub(series.mul(a, b), k, order)
    rhs = series.mul(sub(a, k, order), sub(b, k, order))
    if lhs != rhs:
        return {"k": k, "a": _s(a), "b": _s(b)}


def p_exp_log(rng, order):
    z = random_series(rng, order, monic=True)
    if zeta.exp_series(zeta.log_series(z)) != z:
        return {"direction": "exp(log z)", "z": _s(z)}
    x = random_series(rng, order, zero_const=True)
    if zeta.log_series(zeta.exp_series(x)) != x:
        return {"direction": "log(exp x)", "x": _s(x)}


def p_pow_additive(rng, order):
    z = random_series(rng, order, monic=True)
    a, b = random_rational(rng), random_rational(rng)
    lhs = zeta.pow_rational(z, a + b)
    rhs = series.mul(zeta.pow_rational(z, a), zeta.pow_rational(z, b))
    if lhs != rhs:
        return {"z": _s(z), "a": fraction_to_str(a), "b": fraction_to_str(b)}


def p_factorize_roundtrip(rng, order):
    z = random_series(rng, order, monic=True, integer=rng.random() < 0.5)
    if zeta.expand_factors(zeta.factorize(z), order) != z:
        return {"z": _s(z)}
    exps = {n: rng.randint(-3, 3) for n in rng.sample(range(1, order + 1), min(order, 4))} if order else {}
    f = zeta.FactorExponents(exps, order)
    if zeta.factorize(zeta.expand_factors(f, order)) != f:
        return {"exponents": {str(n): str(e) for n, e in exps.items()}}


def p_integrality(rng, order):
    if rng.random() < 0.5:
        z = random_series(rng, order, monic=True, integer=True)
    else:
        z = random_fractional_monic(rng, order)
    if bool(zeta.is_integral(z)) != zeta.factorize(z).is_integral():
        return {"z": _s(z)}


def p_indices_roundtrip(rng, order):
    i = [rng.randint(-5, 5) for _ in range(order)]
    back = zeta.indices_from_zeta(zeta.zeta_from_indices(i))
    if back != i:
        return {"i": i}


def p_sp_oracle(rng, order):
    n_max = min(order, ORACLE_CAP)
    i = [rng.randint(-4, 4) for _ in range(n_max)]
    s = transforms.sp_from_indices_recurrence(i)
    for n in range(1, n_max + 1):
        if transforms.sp_from_indices_compositions(i, n) != s[n - 1]:
            return {"direction": "i->s", "i": i, "n": n}
    sp = [rng.randint(-4, 4) for _ in range(n_max)]
    back = transforms.indices_from_sp_recurrence(sp)
    for n in range(1, n_max + 1):
        if transforms.indices_from_sp_compositions(sp, n) != back[n - 1]:
            return {"direction": "s->i", "s": sp, "n": n}
    if transforms.indices_from_sp_recurrence(s) != i:
        return {"direction": "roundtrip", "i": i}


def p_mobius_reconstruction(rng, order):
    i = [rng.randint(-9, 9) for _ in range(order)]
    if transforms.indices_from_dold(transforms.dold_coefficients(i)) != i:
        return {"i": i}


def p_four_encodings(rng, order):
    table = random_orbit_table(rng, order)
    z = spectral.orbit_zeta(table, order)
    e = transforms.exponents_from_orbit_counts(table, order)
    if zeta.factorize(z) != e:
        return {"check": "factorize(orbit_zeta) = e", "orbits": [list(o) for o in table.orbits]}
    i = zeta.indices_from_zeta(z)
    for n in range(1, order + 1):
        if i[n - 1] != -sum(k * e[k] for k in transforms.divisors(n)):
            return {"check": "i_n = -sum k e_k", "orbits": [list(o) for o in table.orbits], "n": n}
    a = transforms.dold_coefficients(i)
    if [-x for x in a.values] != e.as_list():
        return {"check": "a_k = -e_k", "orbits": [list(o) for o in table.orbits]}


def p_two_path(rng, order):
    A = random_admissible_matrix(rng, order)
    if spectral.matrix_zeta(A, order) != spectral.linear_zeta(spectral.spectral_class(A), order):
        return {"matrix": matrix_to_json(A)}


def p_dold_spectra(rng, order):
    A = random_admissible_matrix(rng, order)
    i = spectral.index_sequence_of_matrix(A, order)
    verdict = transforms.dold_check(i)
    if not verdict.passed:
        return {"matrix": matrix_to_json(A), "verdict": verdict.to_json()}


def p_iteration_coherence(rng, order):
    m = rng.randint(1, min(order, 4)) if order else 1
    while True:
        d = rng.randint(1, 3)
        A = random_integer_matrix(rng, d, d, -3, 3)
        if spectral.is_admissible(A):
            break
    table = spectral.OrbitTable.from_linearizations([(m, A)])
    cls = spectral.spectral_class(A ** m)
    comp_order = -(-order // m)
    lhs = spectral.orbit_zeta(table, order)
    rhs = spectral.iterate_zeta_axiom(spectral.linear_zeta(cls, comp_order), m, order)
    if lhs != rhs:
        return {"matrix": matrix_to_json(A), "period": m}


def p_eq_iterates(rng, order):
    m, k = rng.randint(1, 8), rng.randint(1, 8)
    a, b = rng.randint(-3, 3), rng.randint(-3, 3)
    z = spectral.orbit_zeta_iterate(m, a, b, k, max(order, 1))
    lin = transforms.linear_coefficient_of_iterate([(m, a, b)], k)
    if zeta.indices_from_zeta(z)[0] != lin:
        return {"m": m, "a": a, "b": b, "k": k}


def p_lecalvez(rng, order):
    q, r = rng.randint(1, 6), rng.randint(-4, 4)
    z = spectral.lecalvez_zeta(q, r, order)
    if r > 0:
        deg = r * q - 1
        if any(z.coeffs[n] for n in range(r * q, order + 1)):
            return {"q": q, "r": r, "issue": "non-zero coefficient at n >= rq"}
        if deg <= order and not z.coeffs[deg]:
            return {"q": q, "r": r, "issue": f"degree below {deg}"}
    elif order and not z.coeffs[order]:
        return {"q": q, "r": r, "issue": "expected a non-polynomial tail"}


def p_macdonald(rng, order):
    chi = rng.randint(-3, 5)
    if spectral.macdonald_series(chi, order) != zeta.zeta_from_indices([chi] * order):
        return {"chi": chi}


def p_charpoly_ab_ba(rng, order):
    d, d2 = rng.randint(1, 4), rng.randint(1, 4)
    A = random_integer_matrix(rng, d, d2)
    B = random_integer_matrix(rng, d2, d)
    lhs = spectral.char_poly(A @ B) * _xpow(d2)
    rhs = spectral.char_poly(B @ A) * _xpow(d)
    if lhs != rhs:
        return {"A": matrix_to_json(A), "B": matrix_to_json(B)}


def _xpow(n):
    return Polynomial((0,) * n + (1,))


def p_commutativity(rng, order):
    A, B = random_composable_pair(rng, order)
    if not spectral.commutativity_witness(A, B, order).passed:
        return {"A": matrix_to_json(A), "B": matrix_to_json(B)}


class Property(NamedTuple):
    name: str
    check: Callable


PROPERTIES = (
    Property("series.mul_inverse_identity", p_inverse),
    Property("series.ring_laws", p_ring_laws),
    Property("series.substitute_homomorphism", p_substitute_homomorphism),
    Property("zeta.exp_log_inverse", p_exp_log),
    Property("zeta.pow_additive", p_pow_additive),
    Property("zeta.factorize_expand_roundtrip", p_factorize_roundtrip),
    Property("zeta.integrality_equivalence", p_integrality),
    Property("zeta.indices_zeta_roundtrip", p_indices_roundtrip),
    Property("transforms.composition_oracle", p_sp_oracle),
    Property("transforms.mobius_reconstruction", p_mobius_reconstruction),
    Property("transforms.four_encodings", p_four_encodings),
    Property("spectral.two_path_agreement", p_two_path),
    Property("spectral.dold_on_spectra", p_dold_spectra),
    Property("spectral.iteration_coherence", p_iteration_coherence),
    Property("spectral.iterate_linear_terms", p_eq_iterates),
    Property("spectral.lecalvez_polynomiality", p_lecalvez),
    Property("spectral.macdonald", p_macdonald),
    Property("spectral.charpoly_ab_ba", p_charpoly_ab_ba),
    Property("spectral.commutativity", p_commutativity),
)


def run_verify(order: int = 16, seed: int = 0, count: int = 100) -> dict:
    """Run every property ``count`` times; stops a property at its first failure."""
    results = []
    for prop in PROPERTIES:
        rng = random.Random(f"{seed}:{prop.name}")
        ran, counterexample = 0, None
        for _ in range(count):
            ran += 1
            try:
                counterexample = prop.check(rng, order)
            except Exception as exc:  # a crash is a failed instance too
                counterexample = {"exception": f"{type(exc).__name__}: {exc}"}
            if counterexample is not None:
                break
        results.append({
            "name": prop.name,
            "instances": ran,
            "pass": counterexample is None,
            "counterexample": counterexample,
        })
    return {
        "order": order,
        "seed": seed,
        "count": count,
        "pass": all(r["pass"] for r in results),
        "properties": results,
    }
