"""Binary curves y^2 + xy = x^3 + a x^2 + b in Lopez-Dahab coordinates.

(X, Y, Z) represents (X/Z, Y/Z^2); Z = 0 is infinity, canonically (1, 0, 0).
Per-call budgets on the generic path:

    ld_add_full   13M + 4S
    ld_add_mixed   8M + 5S + 1 mult by a
    ld_double      4M + 4S + 1 mult by a

Equal/opposite inputs are detected from intermediates the formulas compute
anyway, so the checks cost no extra field operations.
"""

from __future__ import annotations

from typing import NamedTuple

from .counter import counting
from .errors import CorruptionError, NotOnCurveError, UsageError
from .f2m import F2mElement, F2mParams
from .oracle import BinaryOracle
from .points import INFINITY, AffinePoint


class LdPoint(NamedTuple):
    X: F2mElement
    Y: F2mElement
    Z: F2mElement

    def is_infinity(self) -> bool:
        return self.Z.is_zero()


class BinaryCurve:
    model = "binary"

    def __init__(self, field: F2mParams, a: int, b: int, gx: int, gy: int,
                 order_n: int, cofactor_h: int = 2, name: str = ""):
        if b == 0:
            raise UsageError("b must be nonzero")
        self.field = field
        self.name = name
        self.a = field(a)
        self.b = field(b)
        self.order_n = order_n
        self.cofactor_h = cofactor_h
        self.generator = self.point(gx, gy)

    def __repr__(self):
        return f"BinaryCurve({self.name or 'm=%d' % self.field.m})"

    @property
    def group_order(self) -> int:
        return self.order_n * self.cofactor_h

    def oracle(self) -> BinaryOracle:
        return BinaryOracle(self.field.reduction_poly, int(self.a), int(self.b))

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
            xx = x.square()
            return y.square() + x * y == (x + self.a) * xx + self.b

    def ld_on_curve(self, pt: LdPoint) -> bool:
        """Y^2 + XYZ = X^3 Z + a X^2 Z^2 + b Z^4."""
        if pt.Z.is_zero():
            return True
        with counting(None):
            X, Y, Z = pt
            z2 = Z.square()
            x2 = X.square()
            return Y.square() + X * Y * Z == x2 * X * Z + self.a * x2 * z2 + self.b * z2.square()

    def neg(self, pt: AffinePoint) -> AffinePoint:
        if pt.is_infinity:
            return pt
        return AffinePoint(pt.x, pt.x + pt.y)

    def infinity_ld(self) -> LdPoint:
        return LdPoint(self.field.one, self.field.zero, self.field.zero)

    def random_point(self, rng) -> AffinePoint:
        xy = self.oracle().mul(rng.randrange(1, self.order_n), self.generator.ints())
        return INFINITY if xy is None else self.point(*xy)


def ld_from_affine(pt: AffinePoint, curve: BinaryCurve) -> LdPoint:
    if not curve.on_curve(pt):
        raise NotOnCurveError(f"{pt} is not on {curve}")
    if pt.is_infinity:
        return curve.infinity_ld()
    return LdPoint(pt.x, pt.y, curve.field.one)


def ld_to_affine(pt: LdPoint, curve: BinaryCurve) -> AffinePoint:
    X, Y, Z = pt
    if Z.is_zero():
        return INFINITY
    zi = Z.inv()
    res = AffinePoint(X * zi, Y * zi.square())
    if not curve.on_curve(res):
        raise CorruptionError(f"LD point {pt} maps off the curve")
    return res


def ld_neg(pt: LdPoint) -> LdPoint:
    # -(x, y) = (x, x + y)  =>  (X, XZ + Y, Z)
    return LdPoint(pt.X, pt.X * pt.Z + pt.Y, pt.Z)


def ld_double(P: LdPoint, curve: BinaryCurve) -> LdPoint:
    X1, Y1, Z1 = P
    if Z1.is_zero():
        return curve.infinity_ld()
    S = X1.square()
    U = S + Y1
    T = X1 * Z1
    Z3 = T.square()
    T = U * T
    X3 = U.square() + T + Z3.mul_const(curve.a)
    Y3 = (Z3 + T) * X3 + S.square() * Z3
    if Z3.is_zero():
        return curve.infinity_ld()
    return LdPoint(X3, Y3, Z3)


def ld_add_full(P: LdPoint, Q: LdPoint, curve: BinaryCurve) -> LdPoint:
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    if Z1.is_zero():
        return Q
    if Z2.is_zero():
        return P
    A1 = X1 * Z2
    A2 = X2 * Z1
    C = A1 + A2
    B1 = A1.square()
    B2 = A2.square()
    D = B1 + B2
    E1 = Y1 * Z2.square()
    E2 = Y2 * Z1.square()
    F = E1 + E2
    if C.is_zero():
        if F.is_zero():
            return ld_double(P, curve)
        return curve.infinity_ld()
    G = C * F
    Z3 = Z1 * Z2 * D
    X3 = A1 * (E2 + B2) + A2 * (E1 + B1)
    Y3 = (A1 * G + E1 * D) * D + (G + Z3) * X3
    return LdPoint(X3, Y3, Z3)


def ld_add_mixed(P: LdPoint, Q: AffinePoint, curve: BinaryCurve) -> LdPoint:
    """P + Q with P in LD coordinates and Q affine (Z = 1)."""
    if Q.is_infinity:
        return P
    X2, Y2, Z2 = P
    if Z2.is_zero():
        return LdPoint(Q.x, Q.y, curve.field.one)
    X1, Y1 = Q.x, Q.y
    U = Z2.square() * Y1 + Y2
    S = Z2 * X1 + X2
    if S.is_zero():
        if U.is_zero():
            return ld_double(P, curve)
        return curve.infinity_ld()
    T = Z2 * S
    Z3 = T.square()
    V = Z3 * X1
    C = X1 + Y1
    X3 = U.square() + T * (U + S.square() + T.mul_const(curve.a))
    Y3 = (V + X3) * (T * U + Z3) + Z3.square() * C
    return LdPoint(X3, Y3, Z3)


def ld_equal(P: LdPoint, Q: LdPoint) -> bool:
    with counting(None):
        if P.Z.is_zero() or Q.Z.is_zero():
            return P.Z.is_zero() and Q.Z.is_zero()
        return P.X * Q.Z == Q.X * P.Z and P.Y * Q.Z.square() == Q.Y * P.Z.square()
