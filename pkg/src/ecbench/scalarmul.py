"""Left-to-right scalar multiplication over any supported coordinate system.

The multiplier recodes the scalar, loads the leading digit from a table of
odd multiples, then walks the digits most-significant first: one doubling
per position, one addition per nonzero digit. Point operations are tallied
by the multiplier (one per scheduled step), field operations by the field
layer. Table construction is tallied in the counter's ``precomp`` bank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from . import counter as _counter
from .counter import OpCounter, counting
from .edwards import (
    EdwardsCurve, EdwardsProjPoint, InvEdwardsPoint, ed_add, ed_double, ed_to_affine,
    ed_to_inverted, inv_ed_add, inv_ed_double, inv_ed_to_affine, inv_ed_triple, inverted_to_ed,
)
from .errors import ExceptionalPointError, NotOnCurveError, UsageError
from .ld import BinaryCurve, LdPoint, ld_add_mixed, ld_double, ld_to_affine
from .points import AffinePoint
from .recode import SCHEMES, SignedDigitString, recode
from .weierstrass import JacobianPoint, WeierstrassCurve, jac_add, jac_double, jac_to_affine

COORDINATE_SYSTEMS = ("jacobian", "ld", "edwards", "inverted_edwards")


@dataclass(frozen=True)
class MultiplierConfig:
    coordinate_system: str
    recoding: str = "binary"
    width_w: Optional[int] = None
    use_tripling: bool = False

    def __post_init__(self):
        if self.coordinate_system not in COORDINATE_SYSTEMS:
            raise UsageError(f"unknown coordinate system {self.coordinate_system!r}")
        if self.recoding not in SCHEMES:
            raise UsageError(f"unknown recoding {self.recoding!r}")
        windowed = self.recoding in ("wnaf", "complement_window")
        if windowed and (self.width_w is None or self.width_w < 2):
            raise UsageError(f"{self.recoding} needs width_w >= 2")
        if not windowed and self.width_w is not None:
            raise UsageError(f"{self.recoding} takes no width")
        if self.use_tripling and self.coordinate_system != "inverted_edwards":
            raise UsageError("tripling is only available in inverted Edwards coordinates")

    @property
    def label(self) -> str:
        s = f"{self.coordinate_system}/{self.recoding}"
        if self.width_w is not None:
            s += f"/w={self.width_w}"
        if self.use_tripling:
            s += "/tpl"
        return s

    def table_width(self) -> int:
        """Width t of the odd-multiple table {P, 3P, ..., (2^t - 1)P} the scheme reads."""
        if self.recoding == "wnaf":
            return self.width_w - 1
        if self.recoding == "complement_window":
            return self.width_w
        return 1


# --- coordinate-system adapters ------------------------------------------
#
# Each adapter exposes: lift (affine -> runtime), entry (runtime -> table
# form), entry_from_affine, load (table -> runtime), double, add (runtime +
# table entry), neg_entry, to_affine.


class _Jacobian:
    name = "jacobian"

    def __init__(self, curve: WeierstrassCurve):
        self.curve = curve

    def lift(self, pt: AffinePoint) -> JacobianPoint:
        return JacobianPoint(pt.x, pt.y, self.curve.field.one)

    def entry(self, runtime: JacobianPoint) -> AffinePoint:
        return jac_to_affine(runtime, self.curve)

    def entry_from_affine(self, pt: AffinePoint) -> AffinePoint:
        return pt

    def load(self, entry: AffinePoint) -> JacobianPoint:
        if entry.is_infinity:
            return self.curve.infinity_jacobian()
        return self.lift(entry)

    def double(self, pt):
        return jac_double(pt, self.curve)

    def add(self, pt, entry):
        return jac_add(pt, entry, self.curve)

    def neg_entry(self, entry: AffinePoint) -> AffinePoint:
        return self.curve.neg(entry)

    def to_affine(self, pt) -> AffinePoint:
        return jac_to_affine(pt, self.curve)


class _LopezDahab:
    name = "ld"

    def __init__(self, curve: BinaryCurve):
        self.curve = curve

    def lift(self, pt: AffinePoint) -> LdPoint:
        return LdPoint(pt.x, pt.y, self.curve.field.one)

    def entry(self, runtime: LdPoint) -> AffinePoint:
        return ld_to_affine(runtime, self.curve)

    def entry_from_affine(self, pt: AffinePoint) -> AffinePoint:
        return pt

    def load(self, entry: AffinePoint) -> LdPoint:
        if entry.is_infinity:
            return self.curve.infinity_ld()
        return self.lift(entry)

    def double(self, pt):
        return ld_double(pt, self.curve)

    def add(self, pt, entry):
        return ld_add_mixed(pt, entry, self.curve)

    def neg_entry(self, entry: AffinePoint) -> AffinePoint:
        return self.curve.neg(entry)

    def to_affine(self, pt) -> AffinePoint:
        return ld_to_affine(pt, self.curve)


class _Edwards:
    name = "edwards"

    def __init__(self, curve: EdwardsCurve):
        self.curve = curve

    def lift(self, pt: AffinePoint) -> EdwardsProjPoint:
        return EdwardsProjPoint(pt.x, pt.y, self.curve.field.one)

    def entry(self, runtime: EdwardsProjPoint) -> EdwardsProjPoint:
        return self.lift(ed_to_affine(runtime, self.curve))

    def entry_from_affine(self, pt: AffinePoint):
        return self.lift(pt)

    def load(self, entry):
        return entry

    def double(self, pt):
        return ed_double(pt, self.curve)

    def add(self, pt, entry):
        return ed_add(pt, entry, self.curve)

    def neg_entry(self, entry: EdwardsProjPoint) -> EdwardsProjPoint:
        return EdwardsProjPoint(-entry.X, entry.Y, entry.Z)

    def to_affine(self, pt) -> AffinePoint:
        return ed_to_affine(pt, self.curve)


class _InvertedEdwards:
    """Inverted Edwards with transparent fallback.

    Runtime values and table entries are InvEdwardsPoint when representable
    and EdwardsProjPoint otherwise. Mixed operands, or an inverted formula
    raising ExceptionalPointError, route the step through the standard
    Edwards formulas; the result returns to inverted form when possible.
    """

    name = "inverted_edwards"

    def __init__(self, curve: EdwardsCurve):
        curve._require_unit_c()
        self.curve = curve

    def lift(self, pt: AffinePoint):
        one = self.curve.field.one
        if pt.x.is_zero() or pt.y.is_zero():
            return EdwardsProjPoint(pt.x, pt.y, one)
        # (1/x : 1/y : 1) scaled by xy
        return InvEdwardsPoint(pt.y, pt.x, pt.x * pt.y)

    def entry(self, runtime):
        return self.lift(self.to_affine(runtime))

    def entry_from_affine(self, pt: AffinePoint):
        return self.lift(pt)

    def load(self, entry):
        return entry

    @staticmethod
    def _std(pt) -> EdwardsProjPoint:
        return inverted_to_ed(pt) if isinstance(pt, InvEdwardsPoint) else pt

    @staticmethod
    def _back(pt: EdwardsProjPoint):
        X, Y, Z = pt
        if X.is_zero() or Y.is_zero():
            return pt
        return ed_to_inverted(pt)

    @staticmethod
    def _fallback() -> None:
        c = _counter._active.get()
        if c is not None:
            c.fallbacks += 1

    def double(self, pt):
        if isinstance(pt, InvEdwardsPoint):
            try:
                return inv_ed_double(pt, self.curve)
            except ExceptionalPointError:
                pass
        self._fallback()
        return self._back(ed_double(self._std(pt), self.curve))

    def triple(self, pt):
        if isinstance(pt, InvEdwardsPoint):
            try:
                return inv_ed_triple(pt, self.curve)
            except ExceptionalPointError:
                pass
        self._fallback()
        std = self._std(pt)
        return self._back(ed_add(ed_double(std, self.curve), std, self.curve))

    def add(self, pt, entry):
        if isinstance(pt, InvEdwardsPoint) and isinstance(entry, InvEdwardsPoint):
            try:
                return inv_ed_add(pt, entry, self.curve)
            except ExceptionalPointError:
                pass
        self._fallback()
        return self._back(ed_add(self._std(pt), self._std(entry), self.curve))

    def neg_entry(self, entry):
        if isinstance(entry, InvEdwardsPoint):
            return InvEdwardsPoint(-entry.X, entry.Y, entry.Z)
        return EdwardsProjPoint(-entry.X, entry.Y, entry.Z)

    def to_affine(self, pt) -> AffinePoint:
        if isinstance(pt, InvEdwardsPoint):
            return inv_ed_to_affine(pt, self.curve)
        return ed_to_affine(pt, self.curve)


def make_system(curve, coordinate_system: str):
    if coordinate_system == "jacobian" and isinstance(curve, WeierstrassCurve):
        return _Jacobian(curve)
    if coordinate_system == "ld" and isinstance(curve, BinaryCurve):
        return _LopezDahab(curve)
    if coordinate_system == "edwards" and isinstance(curve, EdwardsCurve):
        return _Edwards(curve)
    if coordinate_system == "inverted_edwards" and isinstance(curve, EdwardsCurve):
        return _InvertedEdwards(curve)
    raise UsageError(f"{coordinate_system} coordinates do not apply to {curve!r}")


@dataclass(frozen=True)
class PrecompTable:
    """Odd multiples {P, 3P, ..., (2^w - 1)P}; ``entries[i]`` is (2i+1)P.

    Negative multiples are derived on read.
    """

    base: AffinePoint
    width_w: int
    entries: Tuple[Any, ...]
    coordinate_system: str

    def __len__(self):
        return len(self.entries)

    @property
    def max_multiple(self) -> int:
        return 2 * len(self.entries) - 1


def build_precomp(P: AffinePoint, w: int, system) -> PrecompTable:
    """Table of odd multiples up to (2^w - 1)P by a double-then-add chain.

    Every entry is normalized once (one inversion each). Counts go to the
    active counter; callers route them to a precomp bank.
    """
    if w < 1:
        raise UsageError("table width must be >= 1")
    if isinstance(system, str):
        raise UsageError("pass a coordinate-system adapter (see make_system)")
    cur = system.lift(P)
    entries: List[Any] = [system.entry_from_affine(P)]
    c = _counter._active.get()
    if w > 1:
        two_p = system.entry(system.double(cur))
        if c is not None:
            c.point_double += 1
        for _ in range(2 ** (w - 1) - 1):
            cur = system.add(cur, two_p)
            if c is not None:
                c.point_add += 1
            entries.append(system.entry(cur))
    return PrecompTable(P, w, tuple(entries), system.name)


class Multiplier:
    """Scalar multiplier bound to one base point and configuration.

    The precomputation table is built on first use and reused; its cost is
    charged to the ``precomp`` bank of the counter passed to that first call.
    """

    def __init__(self, curve, P: AffinePoint, cfg: MultiplierConfig):
        if not curve.on_curve(P) or P.is_infinity:
            raise NotOnCurveError(f"{P} is not a finite point on {curve!r}")
        self.curve = curve
        self.base = P
        self.cfg = cfg
        self.system = make_system(curve, cfg.coordinate_system)
        self.table: Optional[PrecompTable] = None

    def _ensure_table(self, counter: Optional[OpCounter]) -> PrecompTable:
        if self.table is None:
            bank = counter.precomp_bank() if counter is not None else None
            with counting(bank):
                self.table = build_precomp(self.base, self.cfg.table_width(), self.system)
        return self.table

    def recode(self, k: int) -> SignedDigitString:
        return recode(k, self.cfg.recoding, self.cfg.width_w)

    def _entry(self, d: int):
        e = self.table.entries[(abs(d) - 1) >> 1]
        return self.system.neg_entry(e) if d < 0 else e

    def _load(self, d: int, c: Optional[OpCounter]):
        if d & 1:
            return self.system.load(self._entry(d))
        # even leading window value: (d - 1)P + P
        acc = self.system.add(self.system.load(self._entry(d - 1)), self._entry(1))
        if c is not None:
            c.point_add += 1
        return acc

    def multiply(self, k: int, counter: Optional[OpCounter] = None) -> AffinePoint:
        if k < 0:
            raise UsageError("scalar must be non-negative")
        order = self.curve.group_order
        if k >= order:
            k %= order
        if k == 0:
            return self.curve.neutral()
        self._ensure_table(counter)
        digits = self.recode(k).digits
        tripling = self.cfg.use_tripling
        system = self.system
        with counting(counter):
            c = counter
            acc = None
            acc_val = 0
            for i in range(len(digits) - 1, -1, -1):
                d = digits[i]
                if acc is not None:
                    if tripling and d and d == acc_val:
                        acc = system.triple(acc)
                        acc_val *= 3
                        if c is not None:
                            c.point_triple += 1
                        continue
                    acc = system.double(acc)
                    acc_val <<= 1
                    if c is not None:
                        c.point_double += 1
                if d:
                    if acc is None:
                        acc = self._load(d, c)
                    else:
                        acc = system.add(acc, self._entry(d))
                        if c is not None:
                            c.point_add += 1
                    acc_val += d
            assert acc_val == k
            return system.to_affine(acc)


def scalar_mul(k: int, P: AffinePoint, curve, cfg: MultiplierConfig,
               counter: Optional[OpCounter] = None) -> AffinePoint:
    """k * P in affine form; precomputation is charged to ``counter.precomp``."""
    return Multiplier(curve, P, cfg).multiply(k, counter)
