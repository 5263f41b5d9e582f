"""Short Weierstrass curves y^2 = x^3 + a x + b over GF(p), Jacobian coordinates.

A Jacobian triple (X, Y, Z) stands for the affine point (X/Z^2, Y/Z^3);
Z = 0 is the point at infinity, canonically (1, 1, 0).

Doubling uses A = Y^2, B = 4XA, C = 8A^2, D = 3X^2 + aZ^4 (D = 3(X - Z^2)(X + Z^2)
when a = -3). Addition is mixed Jacobian + affine, 8M + 3S.
"""

from __future__ import annotations

from typing import NamedTuple

from .counter import counting
from .errors import CorruptionError, NotOnCurveError, UsageError
from .fp import FpElement, FpParams
from .oracle import WeierstrassOracle
from .points import INFINITY, AffinePoint


class JacobianPoint(NamedTuple):
    X: FpElement
    Y: FpElement
    Z: FpElement

    def is_infinity(self) -> bool:
        return self.Z.is_zero()


class WeierstrassCurve:
    model = "weierstrass"

    def __init__(self, field: FpParams, a: int, b: int, gx: int, gy: int,
                 order_n: int, cofactor_h: int = 1, name: str = "", specialize_a: bool = True):
        p = field.p
        if (4 * a**3 + 27 * b**2) % p == 0:
            raise UsageError("singular curve: 4a^3 + 27b^2 = 0 mod p")
        self.field = field
        self.name = name
        self.a_int, self.b_int = a % p, b % p
        self.a = field(a)
        self.b = field(b)
        # the a = -3 doubling shortcut; switch off to exercise the generic path
        self.a_is_minus3 = specialize_a and self.a_int == p - 3
        self.order_n = order_n
        self.cofactor_h = cofactor_h
        self.generator = self.point(gx, gy)

    def __repr__(self):
        return f"WeierstrassCurve({self.name or hex(self.field.p)})"

    @property
    def group_order(self) -> int:
        return self.order_n * self.cofactor_h

    def oracle(self) -> WeierstrassOracle:
        return WeierstrassOracle(self.field.p, self.a_int, self.b_int)

    def point(self, x: int, y: int) -> AffinePoint:
        pt = AffinePoint(self.field(x), self.field(y))
        if not self.on_curve(pt):
            raise NotOnCurveError(f"({x:#x}, {y:#x}) is not on {self}")
        return pt

    def neutral(self) -> AffinePoint:
        return INFINITY

    def on_curve(self, pt: AffinePoint) -> bool:
        if pt.is_infinity:
            return True
        with counting(None):
            x, y = pt.x, pt.y
            return y.square() == (x.square() + self.a) * x + self.b

    def jacobian_on_curve(self, pt: JacobianPoint) -> bool:
        """Y^2 = X^3 + a X Z^4 + b Z^6."""
        if pt.Z.is_zero():
            return True
        with counting(None):
            X, Y, Z = pt
            z2 = Z.square()
            z4 = z2.square()
            return Y.square() == X.square() * X + self.a * X * z4 + self.b * z4 * z2

    def neg(self, pt: AffinePoint) -> AffinePoint:
        if pt.is_infinity:
            return pt
        return AffinePoint(pt.x, -pt.y)

    def infinity_jacobian(self) -> JacobianPoint:
        one = self.field.one
        return JacobianPoint(one, one, self.field.zero)

    def random_point(self, rng) -> AffinePoint:
        """k * G for random k, computed by the oracle."""
        xy = self.oracle().mul(rng.randrange(1, self.order_n), self.generator.ints())
        return INFINITY if xy is None else self.point(*xy)


def jac_from_affine(pt: AffinePoint, curve: WeierstrassCurve) -> JacobianPoint:
    if not curve.on_curve(pt):
        raise NotOnCurveError(f"{pt} is not on {curve}")
    if pt.is_infinity:
        return curve.infinity_jacobian()
    return JacobianPoint(pt.x, pt.y, curve.field.one)


def jac_to_affine(pt: JacobianPoint, curve: WeierstrassCurve) -> AffinePoint:
    X, Y, Z = pt
    if Z.is_zero():
        return INFINITY
    zi = Z.inv()
    zi2 = zi.square()
    res = AffinePoint(X * zi2, Y * (zi2 * zi))
    if not curve.on_curve(res):
        raise CorruptionError(f"Jacobian point {pt} maps off the curve")
    return res


def jac_neg(pt: JacobianPoint) -> JacobianPoint:
    return JacobianPoint(pt.X, -pt.Y, pt.Z)


def jac_double(pt: JacobianPoint, curve: WeierstrassCurve) -> JacobianPoint:
    X1, Y1, Z1 = pt
    if Z1.is_zero():
        return curve.infinity_jacobian()
    A = Y1.square()
    B = X1 * A
    B = B + B
    B = B + B
    C = A.square()
    C = C + C
    C = C + C
    C = C + C
    if curve.a_is_minus3:
        zz = Z1.square()
        D = (X1 - zz) * (X1 + zz)
        D = D + D + D
    else:
        xx = X1.square()
        z4 = Z1.square().square()
        D = xx + xx + xx + z4.mul_const(curve.a)
    X3 = D.square() - (B + B)
    Y3 = D * (B - X3) - C
    Z3 = Y1 * Z1
    Z3 = Z3 + Z3
    if Z3.is_zero():
        return curve.infinity_jacobian()
    return JacobianPoint(X3, Y3, Z3)


def jac_add(P: JacobianPoint, Q: AffinePoint, curve: WeierstrassCurve) -> JacobianPoint:
    """Mixed addition P + Q with P Jacobian and Q affine."""
    if Q.is_infinity:
        return P
    X1, Y1, Z1 = P
    if Z1.is_zero():
        return JacobianPoint(Q.x, Q.y, curve.field.one)
    A = Z1.square()
    B = Z1 * A
    C = Q.x * A
    D = Q.y * B
    E = C - X1
    F = D - Y1
    if E.is_zero():
        if F.is_zero():
            return jac_double(P, curve)
        return curve.infinity_jacobian()
    G = E.square()
    H = G * E
    I = X1 * G  # noqa: E741
    X3 = F.square() - (H + I + I)
    Y3 = F * (I - X3) - Y1 * H
    Z3 = Z1 * E
    return JacobianPoint(X3, Y3, Z3)


def jac_equal(P: JacobianPoint, Q: JacobianPoint) -> bool:
    """Projective equality by cross-multiplication; not counted."""
    with counting(None):
        if P.Z.is_zero() or Q.Z.is_zero():
            return P.Z.is_zero() and Q.Z.is_zero()
        pz2, qz2 = P.Z.square(), Q.Z.square()
        return P.X * qz2 == Q.X * pz2 and P.Y * qz2 * Q.Z == Q.Y * pz2 * P.Z
