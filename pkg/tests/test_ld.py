import itertools

import pytest

from ecbench.counter import OpCounter, counting
from ecbench.errors import CorruptionError, NotOnCurveError, UsageError
from ecbench.f2m import F2mParams
from ecbench.ld import (
    BinaryCurve, LdPoint, ld_add_full, ld_add_mixed, ld_double, ld_equal, ld_from_affine, ld_neg, ld_to_affine,
)
from ecbench.points import INFINITY


def budget(fn, *args):
    c = OpCounter()
    with counting(c):
        fn(*args)
    return c.field_mul, c.field_sqr, c.const_mul, c.field_add_sub


def lift(curve, P):
    return ld_from_affine(curve.point(*P) if P else INFINITY, curve)


def test_toy_curve_search(toy_b):
    # largest group over GF(2^3) (b != 0), then smallest (a, b)
    from ecbench.oracle import BinaryOracle
    best = max(((BinaryOracle(0b1011, a, b).enumerate().order, -a, -b)
                for a in range(8) for b in range(1, 8)))
    assert (best[0], -best[1], -best[2]) == (14, 1, 1)
    orc = toy_b.oracle()
    assert orc.enumerate().order == 14
    assert orc.point_order(toy_b.generator.ints()) == 14


def test_exhaustive_against_oracle(toy_b):
    orc = toy_b.oracle()
    pts = list(orc.enumerate())
    for P, Q in itertools.product(pts, repeat=2):
        exp = orc.add(P, Q)
        assert ld_to_affine(ld_add_full(lift(toy_b, P), lift(toy_b, Q), toy_b), toy_b).ints() == exp
        Qa = toy_b.point(*Q) if Q else INFINITY
        assert ld_to_affine(ld_add_mixed(lift(toy_b, P), Qa, toy_b), toy_b).ints() == exp
    for P in pts:
        assert ld_to_affine(ld_double(lift(toy_b, P), toy_b), toy_b).ints() == orc.double(P)
        assert ld_to_affine(ld_neg(lift(toy_b, P)), toy_b).ints() == orc.neg(P)


def test_budgets(sect):
    G = sect.generator
    P = ld_double(ld_from_affine(G, sect), sect)
    Q = ld_double(P, sect)
    assert budget(ld_add_full, P, Q, sect)[:3] == (13, 4, 0)
    assert budget(ld_add_mixed, P, G, sect)[:3] == (8, 5, 1)
    m, s, c, a = budget(ld_double, P, sect)
    assert (m, s, c, a) == (4, 4, 1, 5)


def test_projective_invariance(sect):
    P = ld_double(ld_from_affine(sect.generator, sect), sect)
    lam = sect.field(0x1234567)
    scaled = LdPoint(P.X * lam, P.Y * lam.square(), P.Z * lam)
    assert sect.ld_on_curve(scaled)
    assert ld_equal(P, scaled)


def test_order_annihilates(sect):
    assert sect.oracle().mul(sect.order_n, sect.generator.ints()) is None


def test_infinity_cases(sect):
    G = sect.generator
    inf = sect.infinity_ld()
    assert ld_double(inf, sect).is_infinity()
    assert ld_add_full(inf, ld_from_affine(G, sect), sect) == ld_from_affine(G, sect)
    assert ld_add_mixed(ld_from_affine(G, sect), sect.neg(G), sect).is_infinity()
    assert ld_add_full(ld_from_affine(G, sect), ld_neg(ld_from_affine(G, sect)), sect).is_infinity()
    assert ld_to_affine(inf, sect) is INFINITY


def test_rejects_bad_inputs(toy_b):
    with pytest.raises(NotOnCurveError):
        toy_b.point(1, 1)
    with pytest.raises(UsageError):
        BinaryCurve(F2mParams(0b1011), 1, 0, 0, 0, 1)
    f = toy_b.field
    with pytest.raises(CorruptionError):
        ld_to_affine(LdPoint(f(1), f(1), f(1)), toy_b)
