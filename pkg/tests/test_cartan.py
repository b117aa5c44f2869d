from fractions import Fraction

import pytest
import sympy as sp

from abelinv.cartan import (
    OneFormAtPoint,
    PointXYU,
    ZeroF,
    coframe,
    dual_frame,
    duality_matrix,
    frame_derivatives_of_I,
    invariant_I,
    literal_invariant_I,
    partials,
    s3_solution_verdicts,
    s3_remark_check,
    structure_residuals,
    wedge,
)
from abelinv.checks import s3_free_equation
from abelinv.rng import trial_rng

from conftest import eq_of, random_pairs

P011 = PointXYU.of(0, 1, 1)
CUBE = eq_of(0, 0, 0, 1)
ONE = Fraction(1)
IDENTITY = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def zero_residuals(res):
    return all(r.is_zero() for r in res)


def test_partials_examples():
    p = partials(CUBE, P011)
    assert (p.f, p.f_y, p.f_yy, p.f_x) == (1, 3, 6, 0)
    q = partials(eq_of(1, 0, 0, 1), PointXYU.of(0, 0, 1))
    assert (q.f, q.f_yy) == (1, 0)
    eq = eq_of([1, 2], [0, 1], [3, 1], [2, 1])
    x0 = Fraction(1, 2)
    y0 = -eq.c2(x0) / eq.c3(x0)
    assert partials(eq, PointXYU(x0, y0, ONE)).f_yy == 0


def test_partials_mixed():
    eq = eq_of(0, [0, 1], 0, 1)
    p = partials(eq, PointXYU.of(2, 3, 1))
    # f = 3 x y + y^3
    assert (p.f_x, p.f_xy, p.f_xx) == (9, 3, 0)


def test_zero_f():
    with pytest.raises(ZeroF):
        partials(CUBE, PointXYU.of(0, 0, 1))
    with pytest.raises(ZeroF):
        structure_residuals(CUBE, PointXYU.of(1, 0, 2))


def test_point_rejects_zero_u():
    with pytest.raises(ValueError):
        PointXYU.of(0, 0, 0)


def test_coframe_examples():
    th1, th2, vp = coframe(CUBE, P011)
    assert th2 == OneFormAtPoint(-1, 0, 0)
    assert th1 == OneFormAtPoint(1, -1, 0)
    assert coframe(CUBE, PointXYU.of(0, 2, 5))[2].du == Fraction(1, 5)
    p = PointXYU.of(1, 2, 3)
    f = partials(CUBE, p).f
    w = wedge(*coframe(CUBE, p)[:2])
    # (u^2/f^2) dy^dx, i.e. minus that on the dx^dy basis element
    assert (w.dxdy, w.dxdu, w.dydu) == (-p.u ** 2 / f ** 2, 0, 0)


def test_structure_residuals_examples():
    assert zero_residuals(structure_residuals(CUBE, P011))
    eq = eq_of([0, 1], [0, 1], [0, 1], 1)
    g = trial_rng(1, 0)
    for _ in range(5):
        assert zero_residuals(structure_residuals(eq, g.admissible_point(eq)))


def test_structure_residuals_random():
    for eq, _, g in random_pairs(4, order=6, seed=21):
        for _ in range(4):
            assert zero_residuals(structure_residuals(eq, g.admissible_point(eq)))


def test_negative_controls():
    p = PointXYU.of(Fraction(1, 2), 2, 3)
    eq = eq_of([1, 1], [0, 2], [1, 0, 1], [2, 1])
    dx, dy = OneFormAtPoint(ONE, 0, 0), OneFormAtPoint(0, ONE, 0)
    r = structure_residuals(eq, p, perturb=dx)
    assert not r[0].is_zero()
    r = structure_residuals(eq, p, perturb=dy)
    assert not r[1].is_zero()
    # theta2 is proportional to dx, so adding dx to varpi cannot be seen there
    assert structure_residuals(eq, p, perturb=dx)[1].is_zero()


def test_literal_invariant_breaks_third_equation():
    eq = eq_of([1, 1], [0, 2], [1, 0, 1], [2, 1])
    p = PointXYU.of(Fraction(1, 2), 2, 3)
    assert partials(eq, p).f != 1
    r = structure_residuals(eq, p, invariant=literal_invariant_I)
    assert r[0].is_zero() and r[1].is_zero() and not r[2].is_zero()


def test_invariant_examples():
    assert invariant_I(CUBE, P011) == 6
    eq = eq_of([1, 2], [0, 1], [3, 1], [2, 1])
    x0 = Fraction(1, 3)
    y0 = -eq.c2(x0) / eq.c3(x0)
    assert invariant_I(eq, PointXYU(x0, y0, ONE)) == 0
    p, q = PointXYU.of(1, 2, 3), PointXYU.of(1, 2, 6)
    assert invariant_I(eq, q) == invariant_I(eq, p) / 4
    assert literal_invariant_I(CUBE, P011) == 6


def test_I_times_u_squared_independent_of_u():
    eq = eq_of([1, 2], [0, 1], [3, 1], [2, 1])
    vals = {invariant_I(eq, PointXYU.of(Fraction(1, 2), -1, u)) * u ** 2 for u in (1, 2, Fraction(-3, 7))}
    assert len(vals) == 1


def test_duality():
    assert duality_matrix(CUBE, P011) == IDENTITY
    for eq, _, g in random_pairs(3, order=5, seed=30):
        for _ in range(3):
            assert duality_matrix(eq, g.admissible_point(eq)) == IDENTITY


def test_dual_frame_third_vector():
    p = PointXYU.of(1, 2, 7)
    X3 = dual_frame(CUBE, p)[2]
    assert (X3.px, X3.py, X3.pu) == (0, 0, 7)


def test_frame_derivatives_of_I():
    # I = f^2 f_yy / u^2 has u-degree -2, so X3(I) = u dI/du = -2 I
    eq = eq_of([1, 2], [0, 1], [3, 1], [2, 1])
    p = PointXYU.of(Fraction(1, 2), 1, 2)
    assert frame_derivatives_of_I(eq, p)[2] == -2 * invariant_I(eq, p)


def _symbolic_residuals(eq, p):
    x, y, u = sp.symbols("x y u")
    cs = [sum(sp.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(j.coeffs)) for j in eq.coeffs]
    f = cs[0] + 3 * cs[1] * y + 3 * cs[2] * y ** 2 + cs[3] * y ** 3
    th1 = [u, -u / f, 0]
    th2 = [-u / f, 0, 0]
    vp = [sp.diff(f, y) - sp.diff(f, x) / f, -sp.diff(f, y) / f, 1 / u]
    I = f ** 2 * sp.diff(f, y, 2) / u ** 2
    v = (x, y, u)

    def d(a):
        return [sp.diff(a[1], v[0]) - sp.diff(a[0], v[1]), sp.diff(a[2], v[0]) - sp.diff(a[0], v[2]),
                sp.diff(a[2], v[1]) - sp.diff(a[1], v[2])]

    def w(a, b):
        return [a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[1] * b[2] - a[2] * b[1]]

    at = {x: sp.Rational(p.x.numerator, p.x.denominator), y: sp.Rational(p.y.numerator, p.y.denominator),
          u: sp.Rational(p.u.numerator, p.u.denominator)}
    out = []
    for lhs, rhs in ((d(th1), w(vp, th1)), (d(th2), w(vp, th2)), (d(vp), [I * c for c in w(th1, th2)])):
        out.append([sp.simplify((a - b).subs(at)) for a, b in zip(lhs, rhs)])
    return out


def test_symbolic_oracle_agrees():
    eq = eq_of([1, 1], [0, 2], [1, 0, 1], [2, 1], order=3)
    p = PointXYU.of(Fraction(1, 2), 2, 3)
    assert _symbolic_residuals(eq, p) == [[0, 0, 0]] * 3


def test_s3_remark_check_examples():
    assert s3_solution_verdicts(eq_of(0, [1, 2], 0, 1)) == (True, True)
    assert s3_solution_verdicts(eq_of(0, 0, [0, 1], 1)) == (False, False)
    assert s3_solution_verdicts(eq_of(1, 0, 0, 1)) == (False, False)
    for eq in (eq_of(0, 3, 0, 1), eq_of(0, 0, [0, 1], 1), eq_of(1, 0, 0, 1)):
        assert s3_remark_check(eq)


def test_s3_solution_on_constructed_family():
    for eq, _, _ in random_pairs(4, order=8, seed=40):
        free = s3_free_equation(eq.c1, eq.c2, eq.c3)
        assert s3_solution_verdicts(free) == (True, True)
        assert s3_remark_check(eq)
