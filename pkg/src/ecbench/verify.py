"""Oracle cross-check suites behind ``ecbench verify``.

Each suite returns a :class:`SuiteResult`; a failure message names the
module, the inputs in hex, and the expected and observed values.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .counter import counting
from .curves import BUILTIN_CURVES, read_config, curve_from_config
from .edwards import (
    ed_add, ed_double, ed_from_affine, ed_to_affine, inv_ed_add, inv_ed_double, inv_ed_from_affine,
    inv_ed_to_affine, inv_ed_triple,
)
from .errors import ConfigError, ExceptionalPointError
from .f2m import F2mParams
from .fp import FpParams, from_mont, to_mont
from .ld import ld_add_full, ld_add_mixed, ld_double, ld_from_affine, ld_to_affine
from .recode import recode
from .scalarmul import Multiplier, MultiplierConfig
from .weierstrass import jac_add, jac_double, jac_from_affine, jac_to_affine

MAX_FAILURES_SHOWN = 10


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    messages: List[str] = field(default_factory=list)

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.messages) < MAX_FAILURES_SHOWN:
                self.messages.append(describe())

    @property
    def ok(self) -> bool:
        return self.failed == 0


def _h(v) -> str:
    if v is None:
        return "inf"
    if isinstance(v, tuple):
        return "(" + ", ".join(_h(x) for x in v) + ")"
    return hex(v)


def suite_fields(seed: int = 1, pairs: int = 2000) -> SuiteResult:
    res = SuiteResult("fields")
    fp = FpParams(23)
    for a, b in itertools.product(range(23), repeat=2):
        x, y = fp(a), fp(b)
        res.check(int(x + y) == (a + b) % 23 and int(x - y) == (a - b) % 23 and int(x * y) == a * b % 23,
                  lambda: f"fp_field: a={a:#x} b={b:#x} over GF(23)")
    f2 = F2mParams(0b1011)
    for a in range(1, 8):
        res.check(int(f2(a) * f2(a).inv()) == 1, lambda: f"f2m_field: inverse of {a:#x} in GF(2^3)")
    rng = random.Random(seed)
    p = int(read_config("secp160r1")["p"])
    f16, f64 = FpParams(p, 16), FpParams(p, 64)
    for _ in range(pairs):
        a, b = rng.randrange(p), rng.randrange(p)
        r16, r64 = f16(a) * f16(b), f64(a) * f64(b)
        res.check(int(r16) == int(r64) == a * b % p,
                  lambda: f"fp_field: limb 16 vs 64 a={a:#x} b={b:#x}")
        res.check(int(from_mont(to_mont(f16.plain(a)))) == a, lambda: f"fp_field: roundtrip {a:#x}")
    return res


def _toy_formulas(res: SuiteResult) -> None:
    cw = curve_from_config(read_config("toy_w23"))
    ow = cw.oracle()
    pts = [P for P in ow.enumerate() if P is not None]
    for P, Q in itertools.product(pts, repeat=2):
        Pa, Qa = cw.point(*P), cw.point(*Q)
        got = jac_to_affine(jac_add(jac_from_affine(Pa, cw), Qa, cw), cw).ints()
        res.check(got == ow.add(P, Q), lambda: f"weierstrass_jacobian: jac_add {_h(P)} + {_h(Q)}: "
                                               f"expected {_h(ow.add(P, Q))}, got {_h(got)}")
    for P in pts:
        got = jac_to_affine(jac_double(jac_from_affine(cw.point(*P), cw), cw), cw).ints()
        res.check(got == ow.double(P), lambda: f"weierstrass_jacobian: jac_double {_h(P)}")

    cb = curve_from_config(read_config("toy_b3"))
    ob = cb.oracle()
    pts = [P for P in ob.enumerate() if P is not None]
    for P, Q in itertools.product(pts, repeat=2):
        Pa, Qa = cb.point(*P), cb.point(*Q)
        exp = ob.add(P, Q)
        full = ld_to_affine(ld_add_full(ld_from_affine(Pa, cb), ld_from_affine(Qa, cb), cb), cb).ints()
        mixed = ld_to_affine(ld_add_mixed(ld_from_affine(Pa, cb), Qa, cb), cb).ints()
        res.check(full == exp and mixed == exp,
                  lambda: f"ld_binary: add {_h(P)} + {_h(Q)}: expected {_h(exp)}, got {_h(full)}/{_h(mixed)}")
    for P in pts:
        got = ld_to_affine(ld_double(ld_from_affine(cb.point(*P), cb), cb), cb).ints()
        res.check(got == ob.double(P), lambda: f"ld_binary: ld_double {_h(P)}")

    ce = curve_from_config(read_config("toy_ed13"))
    oe = ce.oracle()
    pts = list(oe.enumerate())
    for P, Q in itertools.product(pts, repeat=2):
        Pa, Qa = ce.point(*P), ce.point(*Q)
        exp = oe.add(P, Q)
        got = ed_to_affine(ed_add(ed_from_affine(Pa, ce), ed_from_affine(Qa, ce), ce), ce).ints()
        res.check(got == exp, lambda: f"edwards: ed_add {_h(P)} + {_h(Q)}: expected {_h(exp)}, got {_h(got)}")
        try:
            inv = inv_ed_to_affine(inv_ed_add(inv_ed_from_affine(Pa, ce), inv_ed_from_affine(Qa, ce), ce), ce)
        except ExceptionalPointError:
            continue
        res.check(inv.ints() == exp, lambda: f"edwards: inv_ed_add {_h(P)} + {_h(Q)}")
    for P in pts:
        Pa = ce.point(*P)
        got = ed_to_affine(ed_double(ed_from_affine(Pa, ce), ce), ce).ints()
        res.check(got == oe.double(P), lambda: f"edwards: ed_double {_h(P)}")
        for name, fn, k in (("inv_ed_double", inv_ed_double, 2), ("inv_ed_triple", inv_ed_triple, 3)):
            try:
                r = inv_ed_to_affine(fn(inv_ed_from_affine(Pa, ce), ce), ce).ints()
            except ExceptionalPointError:
                continue
            res.check(r == oe.mul(k, P), lambda: f"edwards: {name} {_h(P)}")


def _configs(coord: str):
    for rec, ws in (("binary", (None,)), ("naf", (None,)), ("wnaf", (2, 3, 4)), ("complement_window", (2, 3))):
        for w in ws:
            yield MultiplierConfig(coord, rec, w)
            if coord == "inverted_edwards":
                yield MultiplierConfig(coord, rec, w, True)


def suite_toy() -> SuiteResult:
    res = SuiteResult("toy")
    with counting(None):
        _toy_formulas(res)
    for name, coords in (("toy_w23", ("jacobian",)), ("toy_b3", ("ld",)),
                         ("toy_ed13", ("edwards", "inverted_edwards"))):
        curve = curve_from_config(read_config(name))
        orc = curve.oracle()
        G = curve.generator
        for coord in coords:
            for mcfg in _configs(coord):
                mult = Multiplier(curve, G, mcfg)
                for k in range(curve.group_order + 1):
                    exp = orc.mul(k, G.ints())
                    got = mult.multiply(k).ints()
                    res.check(got == exp, lambda: f"scalar_mul {name} {mcfg.label}: k={k:#x}: "
                                                  f"expected {_h(exp)}, got {_h(got)}")
    return res


def suite_sampled(count: int = 20, seed: int = 1) -> SuiteResult:
    res = SuiteResult("sampled")
    rng = random.Random(seed)
    for name, coords in (("secp160r1", ("jacobian",)), ("edwards160", ("edwards", "inverted_edwards")),
                         ("sect163r2", ("ld",))):
        curve = curve_from_config(read_config(name))
        orc = curve.oracle()
        G = curve.generator
        mults = [Multiplier(curve, G, MultiplierConfig(c, r, w)) for c in coords
                 for r, w in (("binary", None), ("naf", None), ("wnaf", 4), ("complement_window", 4))]
        for _ in range(count):
            k = rng.getrandbits(160)
            exp = orc.mul(k, G.ints())
            for m in mults:
                got = m.multiply(k).ints()
                res.check(got == exp, lambda: f"scalar_mul {name} {m.cfg.label}: k={k:#x}: "
                                              f"expected {_h(exp)}, got {_h(got)}")
        got = Multiplier(curve, G, MultiplierConfig(coords[0])).multiply(curve.order_n).ints()
        res.check(got == orc.mul(curve.order_n, G.ints()),
                  lambda: f"scalar_mul {name}: order_n * G is not the neutral element")
    return res


def suite_recoding(count: int = 10**5, seed: int = 1) -> SuiteResult:
    res = SuiteResult("recoding")
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.getrandbits(160) | 1 << 159
        for scheme, w in (("binary", None), ("naf", None), ("wnaf", 4), ("complement_window", 4)):
            v = recode(k, scheme, w).value()
            res.check(v == k, lambda: f"scalar_recode {scheme}: k={k:#x} evaluates to {v:#x}")
    return res


def suite_config(path: Optional[str] = None) -> SuiteResult:
    """Generator-on-curve check for the builtin curves or a given file."""
    res = SuiteResult("config")
    for name in ([path] if path else BUILTIN_CURVES):
        try:
            curve_from_config(read_config(name))
            ok, msg = True, ""
        except ConfigError as exc:
            ok, msg = False, str(exc)
        res.check(ok, lambda: f"curve {name}: {msg}")
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "config": suite_config,
    "fields": suite_fields,
    "toy": suite_toy,
    "sampled": suite_sampled,
    "recoding": suite_recoding,
}
