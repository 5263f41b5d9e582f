import itertools
import random

import pytest

from ecbench.counter import OpCounter, counting
from ecbench.errors import CorruptionError, NotOnCurveError, UsageError
from ecbench.fp import FpParams
from ecbench.points import INFINITY
from ecbench.weierstrass import (
    JacobianPoint, WeierstrassCurve, jac_add, jac_double, jac_equal, jac_from_affine, jac_neg, jac_to_affine,
)


def budget(fn, *args):
    c = OpCounter()
    with counting(c):
        fn(*args)
    return c.field_mul, c.field_sqr, c.const_mul, c.field_inv


def test_hand_checked_sum(toy_w):
    P, Q = toy_w.point(3, 10), toy_w.point(9, 7)
    assert jac_to_affine(jac_add(jac_from_affine(P, toy_w), Q, toy_w), toy_w).ints() == (17, 20)
    assert jac_to_affine(jac_double(jac_from_affine(P, toy_w), toy_w), toy_w).ints() == (7, 12)


def test_exhaustive_against_oracle(toy_w):
    orc = toy_w.oracle()
    pts = list(orc.enumerate())
    for P, Q in itertools.product(pts, repeat=2):
        Pa = toy_w.point(*P) if P else INFINITY
        Qa = toy_w.point(*Q) if Q else INFINITY
        J = jac_from_affine(Pa, toy_w)
        assert jac_to_affine(jac_add(J, Qa, toy_w), toy_w).ints() == orc.add(P, Q)
    for P in pts:
        Pa = toy_w.point(*P) if P else INFINITY
        assert jac_to_affine(jac_double(jac_from_affine(Pa, toy_w), toy_w), toy_w).ints() == orc.double(P)


def test_generic_a_path_matches_specialised(secp):
    generic = WeierstrassCurve(secp.field, secp.a_int - secp.field.p, secp.b_int,
                               int(secp.generator.x), int(secp.generator.y), secp.order_n, specialize_a=False)
    assert secp.a_is_minus3 and not generic.a_is_minus3
    J = jac_from_affine(secp.generator, secp)
    for _ in range(5):
        J2 = jac_double(J, secp)
        assert jac_equal(J2, jac_double(J, generic))
        J = J2


def test_budgets(secp):
    G = secp.generator
    J = jac_double(jac_from_affine(G, secp), secp)
    assert budget(jac_double, J, secp) == (4, 4, 0, 0)
    assert budget(jac_add, J, G, secp) == (8, 3, 0, 0)
    assert budget(jac_to_affine, J, secp)[3] == 1


def test_generic_doubling_budget(toy_w):
    J = jac_double(jac_from_affine(toy_w.generator, toy_w), toy_w)
    assert budget(jac_double, J, toy_w) == (3, 6, 1, 0)


def test_representation_independent(secp):
    rng = random.Random(4)
    J = jac_double(jac_from_affine(secp.generator, secp), secp)
    lam = secp.field(rng.randrange(1, secp.field.p))
    J2 = JacobianPoint(J.X * lam.square(), J.Y * lam.square() * lam, J.Z * lam)
    assert jac_equal(J, J2)
    assert secp.jacobian_on_curve(J2)
    assert jac_to_affine(J, secp) == jac_to_affine(J2, secp)


def test_p_plus_minus_p_is_infinity(secp):
    G = secp.generator
    J = jac_from_affine(G, secp)
    assert jac_add(J, secp.neg(G), secp).is_infinity()
    assert jac_to_affine(jac_add(jac_neg(J), G, secp), secp) is INFINITY


def test_add_equal_points_doubles(secp):
    G = secp.generator
    assert jac_equal(jac_add(jac_from_affine(G, secp), G, secp), jac_double(jac_from_affine(G, secp), secp))


def test_infinity_handling(secp):
    inf = secp.infinity_jacobian()
    G = secp.generator
    assert jac_double(inf, secp).is_infinity()
    assert jac_to_affine(jac_add(inf, G, secp), secp) == G
    assert jac_add(jac_from_affine(G, secp), INFINITY, secp) == jac_from_affine(G, secp)
    assert jac_from_affine(INFINITY, secp).is_infinity()


def test_secp160r1_order(secp):
    assert secp.oracle().mul(secp.order_n, secp.generator.ints()) is None
    assert secp.order_n.bit_length() == 161


def test_off_curve_rejected(secp, toy_w):
    with pytest.raises(NotOnCurveError):
        secp.point(1, 1)
    with pytest.raises(NotOnCurveError):
        jac_from_affine(toy_w.point(3, 10)._replace(y=toy_w.field(11)), toy_w)


def test_corrupted_point_detected(toy_w):
    f = toy_w.field
    with pytest.raises(CorruptionError):
        jac_to_affine(JacobianPoint(f(1), f(1), f(1)), toy_w)


def test_singular_curve_rejected():
    with pytest.raises(UsageError):
        WeierstrassCurve(FpParams(23), 0, 0, 0, 0, 1)
