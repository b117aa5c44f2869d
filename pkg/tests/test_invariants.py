import pytest
from hypothesis import given, strategies as st

from abelinv.checks import connection_law, covariant_law, raise_identity, tensor_law
from abelinv.equation import AbelEquation, PseudoGroupMap, transform
from abelinv.invariants import (
    MonomialGrade,
    connection,
    covariant_derivative,
    degree_of,
    nabla_raise,
    s3,
    s_degree,
    s_hierarchy,
    s_weight,
    weight_of,
)
from abelinv.series import Jet

from conftest import J, X, eq_of, jets, random_pairs
from oracle import s_symbolic, to_jet, to_sym


def test_s3_examples():
    assert s3(eq_of(0, 0, [0, 1], 1, order=6)) == J(1, 0, 0, 2, order=6)
    assert s3(eq_of(1, 0, 0, 1)) == Jet.constant(1, 6)
    assert s3(eq_of(0, 5, 0, 1)).is_zero()


def test_s5_example_text():
    s = s_hierarchy(eq_of(0, 0, [0, 1], 1, order=10), 2)
    assert s[0].to_text() == "1 + 2x³"
    assert s[1].to_text() == "15x² + 18x⁵"


def test_s_hierarchy_rejects_zero():
    with pytest.raises(ValueError):
        s_hierarchy(eq_of(0, 0, 0, 1), 0)


def test_hierarchy_matches_symbolic_oracle():
    for eq, _, _ in random_pairs(3, order=8, seed=5):
        got = s_hierarchy(eq, 3)
        sym = s_symbolic([to_sym(c) for c in eq.coeffs], 3)
        for n, (a, b) in enumerate(zip(got, sym), start=1):
            assert a == to_jet(b, 8), n


def test_watermark_drops_one_per_level():
    eq = eq_of([1, 2], [0, 1], [3, 0, 1], [1, 1], order=10)
    assert [s.valid for s in s_hierarchy(eq, 4)] == [9, 8, 7, 6]


def test_connection_examples():
    assert connection(eq_of(0, 0, 0, 1)).is_zero()
    assert connection(eq_of(0, 1, 0, 1)) == Jet.constant(3, 6)
    # c3 = 1 + x: r = 1/(1+x)
    r = connection(eq_of(0, 0, 0, [1, 1]))
    assert r == J(1, -1, 1, -1, 1, -1, order=5)


def test_covariant_examples():
    eq = eq_of(0, 1, 0, 1, order=5)
    phi = X(5)
    assert covariant_derivative(eq, phi, 0) == Jet.constant(1, 4)
    assert covariant_derivative(eq, phi, 2) == J(1, -6, order=4)
    assert covariant_derivative(eq, Jet.zero(5), -2).is_zero()


def test_nabla_raise_examples():
    eq = eq_of(0, 0, [0, 1], 1, order=8)
    ss = s_hierarchy(eq, 2)
    assert nabla_raise(eq, ss[0], 2) == ss[1]
    assert nabla_raise(eq, Jet.zero(8), 2).is_zero()
    assert nabla_raise(eq_of(1, 0, 0, 1), s3(eq_of(1, 0, 0, 1)), 2).is_zero()


def test_raise_identity_random():
    for eq, _, _ in random_pairs(4, order=10, seed=3):
        assert all(r.passed for r in raise_identity(eq, 4))


def test_grades():
    m = MonomialGrade.of((2, 1))
    assert (weight_of(m), degree_of(m)) == (3, 2)
    c0c3sq = MonomialGrade.of((0, 0), (3, 0), (3, 0))
    assert (weight_of(c0c3sq), degree_of(c0c3sq)) == (6, 3)
    assert (weight_of(MonomialGrade()), degree_of(MonomialGrade())) == (0, 0)
    assert MonomialGrade.of((3, 0)) * MonomialGrade.of((0, 0)) == MonomialGrade.of((0, 0), (3, 0))
    with pytest.raises(ValueError):
        MonomialGrade.of((4, 0))


def test_s3_terms_are_homogeneous():
    # every monomial of s3 has weight 6 and degree 3
    terms = [((3, 0), (2, 1)), ((2, 0), (3, 1)), ((1, 0), (2, 0), (3, 0)), ((2, 0),) * 3, ((0, 0), (3, 0), (3, 0))]
    for t in terms:
        m = MonomialGrade.of(*t)
        assert (weight_of(m), degree_of(m)) == (s_weight(1), s_degree(1))


def test_tensor_law_random_pairs():
    for eq, t, _ in random_pairs(5, order=8):
        assert all(r.passed for r in tensor_law(eq, t, 3))


def test_connection_law_random_pairs():
    for eq, t, _ in random_pairs(5, order=8, seed=2):
        assert connection_law(eq, t).passed


@given(c0=jets(5), c1=jets(5), c2=jets(5), c3=jets(5, "nonzero"),
       u=jets(5, "nonzero"), nu=jets(5), mu=jets(5, "nonzero"))
def test_tensor_law_property(c0, c1, c2, c3, u, nu, mu):
    eq = AbelEquation(c0, c1, c2, c3)
    res = tensor_law(eq, PseudoGroupMap(u, nu, mu), 2)
    assert all(r.passed for r in res)


@given(c3=jets(5, "nonzero"), c1=jets(5), u=jets(5, "nonzero"), mu=jets(5, "nonzero"),
       phi=jets(5), n=st.integers(-2, 4))
def test_covariant_law_property(c3, c1, u, mu, phi, n):
    eq = AbelEquation(Jet.zero(5), c1, Jet.zero(5), c3)
    assert covariant_law(eq, PseudoGroupMap(u, Jet.zero(5), mu), phi, n).passed


def test_tensor_law_needs_the_multiplier():
    eq, t, _ = random_pairs(1, order=8, seed=4)[0]
    assert s3(transform(eq, t)) != s3(eq)
