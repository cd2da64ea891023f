from fractions import Fraction

import pytest
import sympy
from hypothesis import settings, strategies as st

from dynzeta import TruncatedSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

T = sympy.symbols("t")

small_ints = st.integers(-5, 5)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))


@st.composite
def series(draw, min_order=0, max_order=12, monic=False, integer=False, zero_const=False):
    order = draw(st.integers(min_order, max_order))
    elem = small_ints.map(Fraction) if integer else rationals
    coeffs = draw(st.lists(elem, min_size=order + 1, max_size=order + 1))
    if monic:
        coeffs[0] = Fraction(1)
    if zero_const:
        coeffs[0] = Fraction(0)
    return TruncatedSeries(tuple(coeffs))


def sympy_series(expr, order):
    """Coefficients c_0..c_order of expr(t) by sympy, as a TruncatedSeries."""
    poly = sympy.series(expr, T, 0, order + 1).removeO()
    coeffs = [sympy.Rational(poly.coeff(T, n)) for n in range(order + 1)]
    return TruncatedSeries(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))


def S(*coeffs, order=None):
    return TruncatedSeries.from_coeffs(coeffs, order)


@pytest.fixture
def t():
    return T


# verdicts of the acceptance criteria, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, seconds, detail = ACCEPTANCE[number]
        line = f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title} ({seconds:.2f}s)"
        terminalreporter.write_line(line + (f": {detail}" if detail else ""))
