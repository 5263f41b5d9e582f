"""Brute-force reference arithmetic used as ground truth by the tests.

Everything here works on plain Python integers and tuples and deliberately
shares no code with the Montgomery, comb or projective paths: affine
chord-and-tangent laws with one inversion per operation, naive scalar
multiplication, and exhaustive enumeration of toy curves.

Points are ``(x, y)`` tuples; ``None`` is the point at infinity for the
Weierstrass and binary models. The Edwards neutral element is the curve
point ``(0, c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import NotOnCurveError, UsageError

Point = Optional[Tuple[int, int]]

ENUMERATION_LIMIT = 1 << 16


@dataclass(frozen=True)
class CurveEnumeration:
    points: Tuple[Point, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.points))

    def __contains__(self, pt) -> bool:
        return pt in self._members

    def __iter__(self):
        return iter(self.points)


class _OracleCurve:
    neutral: Point = None

    def on_curve(self, pt: Point) -> bool:
        raise NotImplementedError

    def add(self, p1: Point, p2: Point) -> Point:
        raise NotImplementedError

    def neg(self, pt: Point) -> Point:
        raise NotImplementedError

    def _require(self, pt: Point) -> None:
        if not self.on_curve(pt):
            raise NotOnCurveError(f"{pt} is not on {self}")

    def double(self, pt: Point) -> Point:
        return self.add(pt, pt)

    def mul(self, k: int, pt: Point) -> Point:
        """Right-to-left double-and-add."""
        if k < 0:
            return self.mul(-k, self.neg(pt))
        self._require(pt)
        acc = self.neutral
        while k:
            if k & 1:
                acc = self.add(acc, pt)
            pt = self.add(pt, pt)
            k >>= 1
        return acc

    def repeated_add(self, k: int, pt: Point) -> Point:
        """``pt + pt + ... + pt`` (k terms), literally."""
        acc = self.neutral
        for _ in range(k):
            acc = self.add(acc, pt)
        return acc

    def point_order(self, pt: Point) -> int:
        n, acc = 1, pt
        while acc != self.neutral:
            acc = self.add(acc, pt)
            n += 1
        return n


class WeierstrassOracle(_OracleCurve):
    """y^2 = x^3 + a x + b over GF(p)."""

    def __init__(self, p: int, a: int, b: int):
        self.p, self.a, self.b = p, a % p, b % p
        if (4 * self.a**3 + 27 * self.b**2) % p == 0:
            raise UsageError("singular curve: 4a^3 + 27b^2 = 0")

    def __repr__(self):
        return f"WeierstrassOracle(p={self.p}, a={self.a}, b={self.b})"

    def on_curve(self, pt: Point) -> bool:
        if pt is None:
            return True
        x, y = pt
        p = self.p
        return 0 <= x < p and 0 <= y < p and (y * y - x**3 - self.a * x - self.b) % p == 0

    def neg(self, pt: Point) -> Point:
        if pt is None:
            return None
        return (pt[0], -pt[1] % self.p)

    def add(self, p1: Point, p2: Point) -> Point:
        self._require(p1)
        self._require(p2)
        if p1 is None:
            return p2
        if p2 is None:
            return p1
        p = self.p
        (x1, y1), (x2, y2) = p1, p2
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            lam = (3 * x1 * x1 + self.a) * pow(2 * y1, -1, p) % p
        else:
            lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        return (x3, (lam * (x1 - x3) - y1) % p)

    def enumerate(self) -> CurveEnumeration:
        p = self.p
        if p > ENUMERATION_LIMIT:
            raise UsageError("field too large to enumerate")
        squares = {}
        for y in range(p):
            squares.setdefault(y * y % p, []).append(y)
        pts: List[Point] = [None]
        for x in range(p):
            rhs = (x**3 + self.a * x + self.b) % p
            for y in squares.get(rhs, ()):
                pts.append((x, y))
        return CurveEnumeration(tuple(pts), len(pts))


# --- binary polynomials, schoolbook ---------------------------------------

_TO_SLOTS = str.maketrans("01", "\x00\x01")
_PARITY = bytes(0x30 | (v & 1) for v in range(256))  # byte -> b"0" / b"1"


def _pmul(a: int, b: int) -> int:
    """Carry-less product via one integer multiplication.

    Each bit is placed in its own byte, so an ordinary product sums the
    bit products of each degree into a separate byte (no overflow while
    fewer than 256 terms meet); the low bit of each byte is the GF(2)
    coefficient.
    """
    if a == 0 or b == 0:
        return 0
    if min(a.bit_length(), b.bit_length()) > 255:
        raise UsageError("operands too long for the byte-slot product")
    sa = int.from_bytes(bin(a)[2:].translate(_TO_SLOTS).encode("latin-1"), "big")
    sb = int.from_bytes(bin(b)[2:].translate(_TO_SLOTS).encode("latin-1"), "big")
    prod = sa * sb
    raw = prod.to_bytes((prod.bit_length() + 7) // 8, "big")
    return int(raw.translate(_PARITY), 2)


def _pdivmod(a: int, f: int) -> Tuple[int, int]:
    q, df = 0, f.bit_length()
    while a.bit_length() >= df:
        s = a.bit_length() - df
        q ^= 1 << s
        a ^= f << s
    return q, a


def _pmod(a: int, f: int) -> int:
    return _pdivmod(a, f)[1]


class BinaryOracle(_OracleCurve):
    """y^2 + x y = x^3 + a x^2 + b over GF(2^m) = GF(2)[x]/(f)."""

    def __init__(self, f: int, a: int, b: int):
        self.f = f
        self.m = f.bit_length() - 1
        self.a, self.b = a, b
        if b == 0:
            raise UsageError("b must be nonzero")
        # x^m = sum of the low terms of f; folding the high part through them
        # reduces a product in a few shift/xor rounds for sparse f
        self._low = [e for e in range(self.m) if f >> e & 1]
        self._mask = (1 << self.m) - 1

    def __repr__(self):
        return f"BinaryOracle(f={self.f:#x}, a={self.a:#x}, b={self.b:#x})"

    def fmul(self, u: int, v: int) -> int:
        t = _pmul(u, v)
        m, mask, low = self.m, self._mask, self._low
        while t >> m:
            h = t >> m
            t &= mask
            for e in low:
                t ^= h << e
        return t

    def finv(self, u: int) -> int:
        # extended Euclid, one leading-term cancellation per step:
        # invariants r0 = s0 * u and r1 = s1 * u (mod f)
        if u == 0:
            raise ZeroDivisionError("zero has no inverse")
        r0, r1, s0, s1 = self.f, _pmod(u, self.f), 0, 1
        while True:
            shift = r0.bit_length() - r1.bit_length()
            if shift < 0:
                r0, r1, s0, s1 = r1, r0, s1, s0
                shift = -shift
            if r1 == 1:
                break
            r0 ^= r1 << shift
            s0 ^= s1 << shift
            if r0 == 0:
                raise ZeroDivisionError("not invertible modulo a reducible polynomial")
        return _pmod(s1, self.f)

    def on_curve(self, pt: Point) -> bool:
        if pt is None:
            return True
        x, y = pt
        if x >> self.m or y >> self.m:
            return False
        lhs = self.fmul(y, y) ^ self.fmul(x, y)
        x2 = self.fmul(x, x)
        rhs = self.fmul(x2, x) ^ self.fmul(self.a, x2) ^ self.b
        return lhs == rhs

    def neg(self, pt: Point) -> Point:
        if pt is None:
            return None
        return (pt[0], pt[0] ^ pt[1])

    def add(self, p1: Point, p2: Point) -> Point:
        self._require(p1)
        self._require(p2)
        if p1 is None:
            return p2
        if p2 is None:
            return p1
        (x1, y1), (x2, y2) = p1, p2
        if x1 == x2:
            if y2 == x1 ^ y1 or x1 == 0:
                return None
            lam = x1 ^ self.fmul(y1, self.finv(x1))
            x3 = self.fmul(lam, lam) ^ lam ^ self.a
            y3 = self.fmul(x1, x1) ^ self.fmul(lam ^ 1, x3)
            return (x3, y3)
        lam = self.fmul(y1 ^ y2, self.finv(x1 ^ x2))
        x3 = self.fmul(lam, lam) ^ lam ^ x1 ^ x2 ^ self.a
        y3 = self.fmul(lam, x1 ^ x3) ^ x3 ^ y1
        return (x3, y3)

    def enumerate(self) -> CurveEnumeration:
        q = 1 << self.m
        if q > ENUMERATION_LIMIT:
            raise UsageError("field too large to enumerate")
        pts: List[Point] = [None]
        for x in range(q):
            for y in range(q):
                if self.on_curve((x, y)):
                    pts.append((x, y))
        return CurveEnumeration(tuple(pts), len(pts))


class EdwardsOracle(_OracleCurve):
    """x^2 + y^2 = c^2 (1 + d x^2 y^2) over GF(p); neutral (0, c)."""

    def __init__(self, p: int, d: int, c: int = 1):
        self.p, self.d, self.c = p, d % p, c % p
        if self.d in (0, 1):
            raise UsageError("d must not be 0 or 1")
        self.neutral = (0, self.c)

    def __repr__(self):
        return f"EdwardsOracle(p={self.p}, d={self.d}, c={self.c})"

    def on_curve(self, pt: Point) -> bool:
        if pt is None:
            return False
        x, y = pt
        p, c = self.p, self.c
        return 0 <= x < p and 0 <= y < p and (x * x + y * y - c * c * (1 + self.d * x * x * y * y)) % p == 0

    def neg(self, pt: Point) -> Point:
        return (-pt[0] % self.p, pt[1])

    def add(self, p1: Point, p2: Point) -> Point:
        self._require(p1)
        self._require(p2)
        p, c = self.p, self.c
        (x1, y1), (x2, y2) = p1, p2
        t = self.d * x1 * x2 * y1 * y2 % p
        den_x = c * (1 + t) % p
        den_y = c * (1 - t) % p
        if den_x == 0 or den_y == 0:
            raise ZeroDivisionError("exceptional Edwards sum (d is a square)")
        return ((x1 * y2 + y1 * x2) * pow(den_x, -1, p) % p, (y1 * y2 - x1 * x2) * pow(den_y, -1, p) % p)

    def enumerate(self) -> CurveEnumeration:
        p = self.p
        if p > ENUMERATION_LIMIT:
            raise UsageError("field too large to enumerate")
        pts = [(x, y) for x in range(p) for y in range(p) if self.on_curve((x, y))]
        pts.remove(self.neutral)
        pts.insert(0, self.neutral)
        return CurveEnumeration(tuple(pts), len(pts))

    def to_weierstrass(self) -> "EdwardsWeierstrassMap":
        return EdwardsWeierstrassMap(self)


class EdwardsWeierstrassMap:
    """Birational map from the c = 1 Edwards curve to a short Weierstrass model.

    Edwards -> Montgomery ``B v^2 = u^3 + A u^2 + u`` via u = (1+y)/(1-y),
    v = u/x, then Montgomery -> Weierstrass via t = u/B + A/(3B), s = v/B.
    The exceptional points (0, +-1) and (+-1, 0) map to infinity and
    2-torsion; only generic points are handled here.
    """

    def __init__(self, ed: EdwardsOracle):
        if ed.c != 1:
            raise UsageError("map implemented for c = 1")
        p, d = ed.p, ed.d
        self.edwards = ed
        self.p = p
        inv = lambda z: pow(z, -1, p)  # noqa: E731
        self.A = 2 * (1 + d) * inv(1 - d) % p
        self.B = 4 * inv(1 - d) % p
        A, B = self.A, self.B
        a = (3 - A * A) * inv(3 * B * B) % p
        b = (2 * A**3 - 9 * A) * inv(27 * B**3) % p
        self.weierstrass = WeierstrassOracle(p, a, b)

    def forward(self, pt: Point) -> Point:
        p = self.p
        x, y = pt
        if pt == self.edwards.neutral:
            return None
        if x == 0 or y == 1:
            raise UsageError("exceptional point for the birational map")
        u = (1 + y) * pow(1 - y, -1, p) % p
        v = u * pow(x, -1, p) % p
        binv = pow(self.B, -1, p)
        return ((u * binv + self.A * pow(3 * self.B, -1, p)) % p, v * binv % p)

    def backward(self, pt: Point) -> Point:
        p = self.p
        if pt is None:
            return self.edwards.neutral
        t, s = pt
        u = (t * self.B - self.A * pow(3, -1, p)) % p
        v = s * self.B % p
        if v == 0 or u == p - 1:
            raise UsageError("exceptional point for the birational map")
        return (u * pow(v, -1, p) % p, (u - 1) * pow(u + 1, -1, p) % p)


def hasse_ok(order: int, q: int) -> bool:
    """|order - (q + 1)| <= 2 sqrt(q)."""
    dev = abs(order - (q + 1))
    return dev * dev <= 4 * q


def enumerate_curve(curve) -> CurveEnumeration:
    return curve.enumerate()


def oracle_add(p1: Point, p2: Point, curve: _OracleCurve) -> Point:
    return curve.add(p1, p2)


def oracle_scalar_mul(k: int, pt: Point, curve: _OracleCurve) -> Point:
    return curve.mul(k, pt)
