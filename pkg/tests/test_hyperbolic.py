import math
import random
from fractions import Fraction

import pytest

from shearlab.hyperbolic import (
    GeodesicArc,
    HyperbolicError,
    MoebiusMap,
    UhpPoint,
    apply,
    distance,
    geodesic_through,
    hyperbolic_circle,
    random_hyperbolic,
    random_unimodular,
)

TOL = 1e-12


def test_apply_unit_translation():
    m = MoebiusMap(1, 1, 0, 1)
    w = apply(m, UhpPoint.interior(0, 1))
    assert w.close_to(UhpPoint.interior(1, 1))


def test_apply_inversion_fixes_i():
    m = MoebiusMap(0, 1, -1, 0)
    assert apply(m, UhpPoint.interior(0, 1)).close_to(UhpPoint.interior(0, 1))


def test_classify_examples():
    assert MoebiusMap(1, 1, 0, 1).classify() == "parabolic"
    assert MoebiusMap(2, 2, Fraction(1, 2), 1).classify() == "hyperbolic"
    assert MoebiusMap(0, 1, -1, 0).classify() == "elliptic"
    assert MoebiusMap(1, 0, 0, 1).classify() == "identity"
    assert MoebiusMap(-1, 0, 0, -1).classify() == "identity"


def test_classify_sign_invariance():
    rng = random.Random(11)
    for _ in range(50):
        m = random_unimodular(rng)
        a, b, c, d = (float(x) for x in m.entries())
        assert MoebiusMap(-a, -b, -c, -d).classify() == m.classify()


def test_fixed_points_hyperbolic_example():
    m = MoebiusMap(2, 2, Fraction(1, 2), 1)
    lo, hi = m.fixed_points()
    assert abs(float(lo.x) - (1 - math.sqrt(5))) <= TOL
    assert abs(float(hi.x) - (1 + math.sqrt(5))) <= TOL


def test_fixed_points_upper_triangular():
    lo, hi = MoebiusMap(2, 1, 0, Fraction(1, 2)).fixed_points()
    assert lo.at_infinity
    assert abs(float(hi.x) + Fraction(2, 3)) <= TOL


def test_fixed_points_parabolic_double():
    lo, hi = MoebiusMap(1, 1, 0, 1).fixed_points()
    assert lo.at_infinity and hi.at_infinity


def test_fixed_points_elliptic_error():
    with pytest.raises(HyperbolicError):
        MoebiusMap(0, 1, -1, 0).fixed_points()


def test_translation_length():
    e = math.e
    assert abs(MoebiusMap(e, 0.0, 0.0, 1 / e).translation_length() - 2.0) <= TOL
    m = MoebiusMap(2, 2, Fraction(1, 2), 1)
    assert abs(m.translation_length() - 2 * math.log((3 + math.sqrt(5)) / 2)) <= TOL
    with pytest.raises(HyperbolicError):
        MoebiusMap(1, 1, 0, 1).translation_length()


def test_trace_length_relation():
    rng = random.Random(5)
    for _ in range(100):
        m = random_hyperbolic(rng)
        ell = m.translation_length()
        assert abs(abs(float(m.trace)) - 2 * math.cosh(ell / 2)) <= 1e-9


def test_distance_basic():
    i = UhpPoint.interior(0, 1)
    assert distance(i, i) == 0.0
    assert abs(distance(i, UhpPoint.interior(0, 2)) - math.log(2)) <= TOL


def test_distance_sinh_identity():
    z, w = UhpPoint.interior(0, 1), UhpPoint.interior(1, 1)
    rho = distance(z, w)
    lhs = math.sinh(rho / 2) ** 2
    rhs = abs(z.as_complex() - w.as_complex()) ** 2 / (4 * float(z.y) * float(w.y))
    assert abs(lhs - rhs) <= TOL


def test_distance_boundary_error():
    with pytest.raises(HyperbolicError):
        distance(UhpPoint.interior(0, 1), UhpPoint.boundary(0))


def test_distance_isometry():
    rng = random.Random(17)
    for _ in range(100):
        g = random_unimodular(rng)
        z = UhpPoint.interior(rng.uniform(-2, 2), rng.uniform(0.2, 3))
        w = UhpPoint.interior(rng.uniform(-2, 2), rng.uniform(0.2, 3))
        assert abs(distance(apply(g, z), apply(g, w)) - distance(z, w)) <= 1e-10


def test_conjugation_invariant_length():
    rng = random.Random(23)
    for _ in range(100):
        m = random_hyperbolic(rng)
        g = random_unimodular(rng)
        conj = g @ m @ g.inverse()
        assert abs(conj.translation_length() - m.translation_length()) <= 1e-9


def test_fixed_points_are_fixed():
    rng = random.Random(29)
    for _ in range(1000):
        m = random_hyperbolic(rng)
        for fp in m.fixed_points():
            out = apply(m, fp)
            if fp.at_infinity:
                assert out.at_infinity
            else:
                assert abs(float(out.x) - float(fp.x)) <= 1e-8 * max(1.0, abs(float(fp.x)))


def test_geodesic_through():
    arc = geodesic_through(UhpPoint.interior(0, 1), UhpPoint.interior(0, 2))
    assert arc.vertical and arc.center == 0.0
    arc = geodesic_through(UhpPoint.boundary(-1), UhpPoint.boundary(1))
    assert not arc.vertical and abs(arc.center) <= TOL and abs(arc.radius - 1) <= TOL
    arc = geodesic_through(UhpPoint.interior(0, 1), UhpPoint.interior(1, 2))
    assert abs(arc.center - 2) <= TOL and abs(arc.radius - math.sqrt(5)) <= TOL
    assert arc.contains(UhpPoint.interior(0, 1)) and arc.contains(UhpPoint.interior(1, 2))
    with pytest.raises(HyperbolicError):
        geodesic_through(UhpPoint.interior(0, 1), UhpPoint.interior(0, 1))


def test_hyperbolic_circle():
    c, r = hyperbolic_circle(UhpPoint.interior(0, 1), 1.0)
    assert c.close_to(UhpPoint.interior(0, math.cosh(1)))
    assert abs(r - math.sinh(1)) <= TOL
    c, r = hyperbolic_circle(UhpPoint.interior(2, 3), 1.0)
    assert c.close_to(UhpPoint.interior(2, 3 * math.cosh(1)))
    assert abs(r - 3 * math.sinh(1)) <= TOL
    # degenerate limit
    c, r = hyperbolic_circle(UhpPoint.interior(0, 1), 1e-9)
    assert c.close_to(UhpPoint.interior(0, 1), 1e-8) and r <= 2e-9


def test_determinant_enforced():
    with pytest.raises(HyperbolicError):
        MoebiusMap(1, 0, 0, 2)
