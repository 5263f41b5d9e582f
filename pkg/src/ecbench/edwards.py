"""Edwards curves x^2 + y^2 = c^2 (1 + d x^2 y^2) over GF(p).

Standard projective coordinates (X : Y : Z) represent (X/Z, Y/Z) with
identity (0 : c : 1). Inverted coordinates (X : Y : Z) represent
(Z/X, Z/Y) and require XYZ != 0, so the neutral element, its negative and
the two points of order 4 have no inverted representation. Formulas that
would consume or produce one of them raise :class:`ExceptionalPointError`;
callers redo the step in standard coordinates.

Both coordinate systems convert with the same map (X : Y : Z) -> (YZ : XZ : XY).
The inverted formulas assume c = 1.

Budgets: ed_add 10M + 1S + 1C + 1D, ed_double 3M + 4S + 3C,
inv_ed_add 9M + 1S + 1D, inv_ed_double 3M + 4S + 1D, inv_ed_triple 7M + 7S + 1D.
"""

from __future__ import annotations

from typing import NamedTuple

from .counter import counting
from .errors import CorruptionError, ExceptionalPointError, NotInvertibleError, NotOnCurveError, UsageError
from .fp import FpElement, FpParams
from .oracle import EdwardsOracle
from .points import AffinePoint


class EdwardsProjPoint(NamedTuple):
    X: FpElement
    Y: FpElement
    Z: FpElement


class InvEdwardsPoint(NamedTuple):
    X: FpElement
    Y: FpElement
    Z: FpElement


class EdwardsCurve:
    model = "edwards"

    def __init__(self, field: FpParams, d: int, gx: int, gy: int, order_n: int,
                 cofactor_h: int = 4, c: int = 1, name: str = "", require_complete: bool = True):
        p = field.p
        if d % p in (0, 1):
            raise UsageError("d must not be 0 or 1")
        if c % p == 0:
            raise UsageError("c must be nonzero")
        self.complete = pow(d % p, (p - 1) // 2, p) == p - 1
        if require_complete and not self.complete:
            raise UsageError(f"d = {d} is a square mod p; the addition law would not be complete")
        self.field = field
        self.name = name
        self.d_int, self.c_int = d % p, c % p
        self.d = field(d)
        self.c = field(c)
        self.order_n = order_n
        self.cofactor_h = cofactor_h
        if not self.on_curve(self.neutral()):
            raise CorruptionError("neutral element is not on the curve")
        self.generator = self.point(gx, gy)

    def __repr__(self):
        return f"EdwardsCurve({self.name or hex(self.field.p)}, d={self.d_int})"

    @property
    def group_order(self) -> int:
        return self.order_n * self.cofactor_h

    def oracle(self) -> EdwardsOracle:
        return EdwardsOracle(self.field.p, self.d_int, self.c_int)

    def point(self, x: int, y: int) -> AffinePoint:
        pt = AffinePoint(self.field(x), self.field(y))
        if not self.on_curve(pt):
            raise NotOnCurveError(f"({x:#x}, {y:#x}) is not on {self}")
        return pt

    def neutral(self) -> AffinePoint:
        return AffinePoint(self.field.zero, self.c)

    def on_curve(self, pt: AffinePoint) -> bool:
        if pt.is_infinity:
            return False
        with counting(None):
            xx, yy = pt.x.square(), pt.y.square()
            return xx + yy == self.c.square() * (self.field.one + self.d * xx * yy)

    def proj_on_curve(self, pt: EdwardsProjPoint) -> bool:
        """(X^2 + Y^2) Z^2 = c^2 (Z^4 + d X^2 Y^2)."""
        with counting(None):
            X, Y, Z = pt
            if Z.is_zero():
                return False
            xx, yy, zz = X.square(), Y.square(), Z.square()
            return (xx + yy) * zz == self.c.square() * (zz.square() + self.d * xx * yy)

    def inv_on_curve(self, pt: InvEdwardsPoint) -> bool:
        """(X^2 + Y^2) Z^2 = X^2 Y^2 + d Z^4 with XYZ != 0 (c = 1)."""
        with counting(None):
            X, Y, Z = pt
            if X.is_zero() or Y.is_zero() or Z.is_zero():
                return False
            xx, yy, zz = X.square(), Y.square(), Z.square()
            return (xx + yy) * zz == xx * yy + self.d * zz.square()

    def neg(self, pt: AffinePoint) -> AffinePoint:
        return AffinePoint(-pt.x, pt.y)

    def identity_proj(self) -> EdwardsProjPoint:
        return EdwardsProjPoint(self.field.zero, self.c, self.field.one)

    def random_point(self, rng) -> AffinePoint:
        xy = self.oracle().mul(rng.randrange(1, self.order_n), self.generator.ints())
        return self.point(*xy)

    def _require_unit_c(self) -> None:
        if self.c_int != 1:
            raise UsageError("inverted Edwards formulas are implemented for c = 1")


def ed_add_affine(P: AffinePoint, Q: AffinePoint, curve: EdwardsCurve) -> AffinePoint:
    """Unified affine addition law; also used for doubling."""
    x1, y1 = P.x, P.y
    x2, y2 = Q.x, Q.y
    t = curve.d * x1 * x2 * y1 * y2
    one = curve.field.one
    try:
        x3 = (x1 * y2 + y1 * x2) * (curve.c * (one + t)).inv()
        y3 = (y1 * y2 - x1 * x2) * (curve.c * (one - t)).inv()
    except NotInvertibleError as exc:
        raise ExceptionalPointError("zero denominator in the Edwards addition law") from exc
    return AffinePoint(x3, y3)


def ed_from_affine(pt: AffinePoint, curve: EdwardsCurve) -> EdwardsProjPoint:
    if not curve.on_curve(pt):
        raise NotOnCurveError(f"{pt} is not on {curve}")
    return EdwardsProjPoint(pt.x, pt.y, curve.field.one)


def ed_to_affine(pt: EdwardsProjPoint, curve: EdwardsCurve) -> AffinePoint:
    X, Y, Z = pt
    zi = Z.inv()
    res = AffinePoint(X * zi, Y * zi)
    if not curve.on_curve(res):
        raise CorruptionError(f"Edwards point {pt} maps off the curve")
    return res


def ed_neg(pt: EdwardsProjPoint) -> EdwardsProjPoint:
    return EdwardsProjPoint(-pt.X, pt.Y, pt.Z)


def ed_add(P: EdwardsProjPoint, Q: EdwardsProjPoint, curve: EdwardsCurve) -> EdwardsProjPoint:
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    A = Z1 * Z2
    B = A.square()
    C = X1 * X2
    D = Y1 * Y2
    E = (C * D).mul_const(curve.d)
    F = B - E
    G = B + E
    X3 = A * F * ((X1 + Y1) * (X2 + Y2) - C - D)
    Y3 = A * G * (D - C)
    Z3 = (F * G).mul_const(curve.c)
    return EdwardsProjPoint(X3, Y3, Z3)


def ed_double(P: EdwardsProjPoint, curve: EdwardsCurve) -> EdwardsProjPoint:
    X1, Y1, Z1 = P
    B = (X1 + Y1).square()
    C = X1.square()
    D = Y1.square()
    E = C + D
    H = Z1.mul_const(curve.c).square()
    J = E - (H + H)
    X3 = (B - E).mul_const(curve.c) * J
    Y3 = E.mul_const(curve.c) * (C - D)
    Z3 = E * J
    return EdwardsProjPoint(X3, Y3, Z3)


def ed_equal(P: EdwardsProjPoint, Q: EdwardsProjPoint) -> bool:
    with counting(None):
        return P.X * Q.Z == Q.X * P.Z and P.Y * Q.Z == Q.Y * P.Z


def _inverted_ok(X: FpElement, Y: FpElement, Z: FpElement) -> bool:
    return not (X.is_zero() or Y.is_zero() or Z.is_zero())


def ed_to_inverted(P: EdwardsProjPoint) -> InvEdwardsPoint:
    X, Y, Z = P
    if not _inverted_ok(X, Y, Z):
        raise ExceptionalPointError("point has no inverted Edwards representation")
    return InvEdwardsPoint(Y * Z, X * Z, X * Y)


def inverted_to_ed(P: InvEdwardsPoint) -> EdwardsProjPoint:
    X, Y, Z = P
    if not _inverted_ok(X, Y, Z):
        raise ExceptionalPointError("inverted coordinates must satisfy XYZ != 0")
    return EdwardsProjPoint(Y * Z, X * Z, X * Y)


def inv_ed_from_affine(pt: AffinePoint, curve: EdwardsCurve) -> InvEdwardsPoint:
    curve._require_unit_c()
    if not curve.on_curve(pt):
        raise NotOnCurveError(f"{pt} is not on {curve}")
    if pt.x.is_zero() or pt.y.is_zero():
        raise ExceptionalPointError("point has no inverted Edwards representation")
    # (1/x : 1/y : 1) scaled by xy
    return InvEdwardsPoint(pt.y, pt.x, pt.x * pt.y)


def inv_ed_to_affine(P: InvEdwardsPoint, curve: EdwardsCurve) -> AffinePoint:
    X, Y, Z = P
    if not _inverted_ok(X, Y, Z):
        raise ExceptionalPointError("inverted coordinates must satisfy XYZ != 0")
    t = (X * Y).inv()
    res = AffinePoint(Z * Y * t, Z * X * t)
    if not curve.on_curve(res):
        raise CorruptionError(f"inverted point {P} maps off the curve")
    return res


def inv_ed_neg(P: InvEdwardsPoint) -> InvEdwardsPoint:
    return InvEdwardsPoint(-P.X, P.Y, P.Z)


def _check_inputs(*pts: InvEdwardsPoint) -> None:
    for P in pts:
        if not _inverted_ok(*P):
            raise ExceptionalPointError("inverted coordinates must satisfy XYZ != 0")


def _check_output(X3: FpElement, Y3: FpElement, Z3: FpElement) -> InvEdwardsPoint:
    if not _inverted_ok(X3, Y3, Z3):
        raise ExceptionalPointError("result has no inverted Edwards representation")
    return InvEdwardsPoint(X3, Y3, Z3)


def inv_ed_add(P: InvEdwardsPoint, Q: InvEdwardsPoint, curve: EdwardsCurve) -> InvEdwardsPoint:
    _check_inputs(P, Q)
    X1, Y1, Z1 = P
    X2, Y2, Z2 = Q
    A = Z1 * Z2
    B = A.square().mul_const(curve.d)
    C = X1 * X2
    D = Y1 * Y2
    E = C * D
    H = C - D
    I = (X1 + Y1) * (X2 + Y2) - C - D  # noqa: E741
    X3 = (E + B) * H
    Y3 = (E - B) * I
    Z3 = A * H * I
    return _check_output(X3, Y3, Z3)


def inv_ed_double(P: InvEdwardsPoint, curve: EdwardsCurve) -> InvEdwardsPoint:
    _check_inputs(P)
    X1, Y1, Z1 = P
    A = X1.square()
    B = Y1.square()
    C = A + B
    D = A - B
    E = (X1 + Y1).square() - C
    zz = Z1.square()
    Z3 = D * E
    X3 = C * D
    Y3 = E * (C - (zz + zz).mul_const(curve.d))
    return _check_output(X3, Y3, Z3)


def inv_ed_triple(P: InvEdwardsPoint, curve: EdwardsCurve) -> InvEdwardsPoint:
    _check_inputs(P)
    X1, Y1, Z1 = P
    A = X1.square()
    B = Y1.square()
    C = Z1.square()
    D = A + B
    E = D - C.mul_const(curve.d)
    E = E + E
    E = E + E
    H = D * (B - A)
    H = H + H
    DD = D.square()
    P_ = DD - A * E
    Q = DD - B * E
    QQ = Q.square()
    X3 = (H + Q) * ((Q + X1).square() - QQ - A)
    Y3 = (H - P_) * P_ * Y1
    Y3 = Y3 + Y3
    Z3 = P_ * ((Q + Z1).square() - QQ - C)
    return _check_output(X3, Y3, Z3)


def inv_ed_equal(P: InvEdwardsPoint, Q: InvEdwardsPoint) -> bool:
    with counting(None):
        return P.X * Q.Z == Q.X * P.Z and P.Y * Q.Z == Q.Y * P.Z
