import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from abelinv.equation import AbelEquation, PseudoGroupMap
from abelinv.rng import trial_rng
from abelinv.series import Jet

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def jets(draw, order=5, constant=None):
    cs = draw(st.lists(small_rationals, min_size=order + 1, max_size=order + 1))
    if constant == "zero":
        cs[0] = Fraction(0)
    elif constant == "one":
        cs[0] = Fraction(1)
    elif constant == "nonzero":
        cs[0] = draw(nonzero_rationals)
    return Jet.from_coeffs(cs, order)


def X(order):
    return Jet.variable(order)


def J(*coeffs, order=None):
    return Jet.from_coeffs(coeffs, order)


def eq_of(*cs, order=6):
    return AbelEquation.from_lists(*cs, order=order)


@pytest.fixture
def rng():
    return trial_rng(20240607, 0)


def random_pairs(count, order=8, seed=11):
    out = []
    for i in range(count):
        g = trial_rng(seed, i)
        out.append((g.equation(order), g.gauge_map(order), g))
    return out


def map_of(u, nu, mu, order=6):
    return PseudoGroupMap(*(Jet.from_coeffs(c if isinstance(c, list) else [c], order) for c in (u, nu, mu)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
