"""Benchmark cells: run many scalar multiplications per configuration and
tabulate operation counts next to the analytic cost model.

Operation-count columns depend only on the seed; the wall-time columns are
the only ones that vary between runs.
"""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass, fields
from typing import Dict, Iterable, List, Optional, Sequence

from .counter import OpCounter
from .curves import load_curve
from .errors import ConfigError, UsageError
from .recode import cost_model
from .scalarmul import COORDINATE_SYSTEMS, Multiplier, MultiplierConfig

DEFAULT_CURVES = {
    "jacobian": "secp160r1",
    "ld": "sect163r2",
    "edwards": "edwards160",
    "inverted_edwards": "edwards160",
}
MODEL_COORDS = {
    "weierstrass": ("jacobian",),
    "binary": ("ld",),
    "edwards": ("edwards", "inverted_edwards"),
}
RECODINGS = ("binary", "naf", "wnaf", "complement_window")
TIMING_COLUMNS = ("mean_ms", "median_ms", "time_improvement_pct")


@dataclass
class BenchConfig:
    curve_file: Optional[str] = None
    coords: Sequence[str] = COORDINATE_SYSTEMS
    recodings: Sequence[str] = RECODINGS
    widths: Sequence[int] = (4,)
    scalars: int = 100
    seed: int = 1
    scalar_bits: int = 160
    limb_bits: int = 16
    timing: bool = False
    tripling: bool = False
    baseline: str = "jacobian/binary"

    def __post_init__(self):
        for c in self.coords:
            if c not in COORDINATE_SYSTEMS:
                raise ConfigError(f"unknown coordinate system {c!r}")
        for r in self.recodings:
            if r not in RECODINGS:
                raise ConfigError(f"unknown recoding {r!r}")
        if any(w < 2 for w in self.widths):
            raise ConfigError("window widths must be >= 2")
        if self.scalars < 1:
            raise ConfigError("need at least one scalar per cell")
        if self.scalar_bits < 2:
            raise ConfigError("scalar length must be >= 2 bits")

    def multiplier_configs(self) -> List[MultiplierConfig]:
        out = []
        for coord in self.coords:
            for rec in self.recodings:
                for w in (self.widths if rec in ("wnaf", "complement_window") else (None,)):
                    out.append(MultiplierConfig(coord, rec, w))
                    if self.tripling and coord == "inverted_edwards":
                        out.append(MultiplierConfig(coord, rec, w, True))
        return out


@dataclass
class BenchRow:
    curve: str
    coord: str
    recoding: str
    w: Optional[int]
    tripling: bool
    scalars: int
    point_add: int
    point_double: int
    point_triple: int
    field_mul: int
    field_sqr: int
    field_add_sub: int
    const_mul: int
    field_inv: int
    fallbacks: int
    precomp_point_ops: int
    precomp_mults: int
    model_pa: int
    model_pd: int
    model_precomp: int
    mults_per_scalar: float
    mult_improvement_pct: Optional[float]
    mean_ms: Optional[float] = None
    median_ms: Optional[float] = None
    time_improvement_pct: Optional[float] = None

    @property
    def label(self) -> str:
        s = f"{self.coord}/{self.recoding}"
        if self.w is not None:
            s += f"/w={self.w}"
        return s + ("/tpl" if self.tripling else "")


COLUMNS = tuple(f.name for f in fields(BenchRow))
_INT_COLS = {f.name for f in fields(BenchRow) if f.type in ("int", "Optional[int]")}
_FLOAT_COLS = {f.name for f in fields(BenchRow) if f.type in ("float", "Optional[float]")}


def bench_scalars(seed: int, count: int, bits: int) -> List[int]:
    """``count`` scalars of exactly ``bits`` bits (MSB set)."""
    rng = random.Random(seed)
    top = 1 << (bits - 1)
    return [rng.getrandbits(bits - 1) | top for _ in range(count)]


def _pct(base: float, value: float) -> float:
    return round(100.0 * (base - value) / base, 2)


def _run_cell(curve, curve_name: str, mcfg: MultiplierConfig, scalars: List[int],
              timing: bool) -> BenchRow:
    mult = Multiplier(curve, curve.generator, mcfg)
    total = OpCounter()
    times = []
    for k in scalars:
        c = OpCounter()
        t0 = time.perf_counter()
        mult.multiply(k, c)
        times.append(time.perf_counter() - t0)
        for name in ("point_add", "point_double", "point_triple", "field_mul", "field_sqr",
                     "field_add_sub", "const_mul", "field_inv", "fallbacks"):
            setattr(total, name, getattr(total, name) + getattr(c, name))
        if c.precomp is not None:
            total.precomp = c.precomp
    pre = total.precomp or OpCounter()
    m = max(k.bit_length() for k in scalars)
    model = cost_model(mcfg.recoding, m, mcfg.width_w)
    n = len(scalars)
    row = BenchRow(
        curve=curve_name, coord=mcfg.coordinate_system, recoding=mcfg.recoding, w=mcfg.width_w,
        tripling=mcfg.use_tripling, scalars=n,
        point_add=total.point_add, point_double=total.point_double, point_triple=total.point_triple,
        field_mul=total.field_mul, field_sqr=total.field_sqr, field_add_sub=total.field_add_sub,
        const_mul=total.const_mul, field_inv=total.field_inv, fallbacks=total.fallbacks,
        precomp_point_ops=pre.point_add + pre.point_double, precomp_mults=pre.field_mul + pre.field_sqr,
        model_pa=model.point_adds_int, model_pd=model.point_doubles, model_precomp=model.precomp_count,
        mults_per_scalar=round((total.field_mul + total.field_sqr) / n, 2),
        mult_improvement_pct=None,
    )
    if timing:
        row.mean_ms = round(1e3 * statistics.fmean(times), 3)
        row.median_ms = round(1e3 * statistics.median(times), 3)
    return row


def run_bench(cfg: BenchConfig) -> List[BenchRow]:
    scalars = bench_scalars(cfg.seed, cfg.scalars, cfg.scalar_bits)
    if cfg.curve_file is not None:
        curve = load_curve(cfg.curve_file, cfg.limb_bits)
        allowed = MODEL_COORDS[curve.model]
        coords = [c for c in cfg.coords if c in allowed]
        if not coords:
            raise ConfigError(f"none of {list(cfg.coords)} applies to a {curve.model} curve")
        curves = {c: (curve.name or cfg.curve_file, curve) for c in coords}
    else:
        coords = list(cfg.coords)
        loaded: Dict[str, object] = {}
        curves = {}
        for c in coords:
            name = DEFAULT_CURVES[c]
            if name not in loaded:
                loaded[name] = load_curve(name, cfg.limb_bits)
            curves[c] = (name, loaded[name])
    rows = []
    for mcfg in cfg.multiplier_configs():
        if mcfg.coordinate_system not in curves:
            continue
        name, curve = curves[mcfg.coordinate_system]
        if mcfg.recoding == "complement_window" and mcfg.width_w >= cfg.scalar_bits:
            raise ConfigError(f"window width {mcfg.width_w} must be below the scalar length")
        rows.append(_run_cell(curve, name, mcfg, scalars, cfg.timing))
    _apply_baseline(rows, cfg.baseline)
    return rows


def _apply_baseline(rows: List[BenchRow], baseline: str) -> None:
    base = next((r for r in rows if r.label == baseline), None)
    if base is None:
        return
    for r in rows:
        r.mult_improvement_pct = _pct(base.mults_per_scalar, r.mults_per_scalar)
        if base.mean_ms is not None and r.mean_ms is not None:
            r.time_improvement_pct = _pct(base.mean_ms, r.mean_ms)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def emit_csv(rows: Iterable[BenchRow], exclude: Sequence[str] = ()) -> str:
    cols = [c for c in COLUMNS if c not in exclude]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_fmt(getattr(r, c)) for c in cols])
    return buf.getvalue()


def parse_csv(text: str) -> List[BenchRow]:
    reader = csv.DictReader(io.StringIO(text))
    out = []
    for rec in reader:
        kw = {}
        for name in COLUMNS:
            raw = rec.get(name, "")
            if raw == "" and name not in ("curve", "coord", "recoding"):
                kw[name] = None
            elif name == "tripling":
                kw[name] = raw == "1"
            elif name in _INT_COLS:
                kw[name] = int(raw)
            elif name in _FLOAT_COLS:
                kw[name] = float(raw)
            else:
                kw[name] = raw
        out.append(BenchRow(**kw))
    return out


def emit_markdown(rows: Sequence[BenchRow]) -> str:
    head = ["Curve", "Configuration", "# PA", "# PD", "# PT", "M", "S", "I",
            "Precomp", "Model PA", "Model PD", "Model precomp", "M+S / scalar", "% improvement (M+S)"]
    timed = any(r.mean_ms is not None for r in rows)
    if timed:
        head += ["Mean ms", "Median ms", "% improvement (time)"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for r in rows:
        n = r.scalars
        cells = [r.curve, r.label, f"{r.point_add / n:.2f}", f"{r.point_double / n:.2f}",
                 f"{r.point_triple / n:.2f}", f"{r.field_mul / n:.1f}", f"{r.field_sqr / n:.1f}",
                 f"{r.field_inv / n:.0f}", str(r.precomp_point_ops), str(r.model_pa), str(r.model_pd),
                 str(r.model_precomp), f"{r.mults_per_scalar:.2f}", _fmt(r.mult_improvement_pct)]
        if timed:
            cells += [_fmt(r.mean_ms), _fmt(r.median_ms), _fmt(r.time_improvement_pct)]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TableRow:
    scheme: str
    w: Optional[int]
    point_adds: int
    point_doubles: int
    precomp: int


def table_rows(m: int = 160, widths: Sequence[int] = (3, 5, 10)) -> List[TableRow]:
    """Analytic rows: binary, NAF, then wNAF and complement-window per width."""
    if m < 2:
        raise UsageError("m must be >= 2")
    rows = [TableRow(s, None, cost_model(s, m).point_adds_int, cost_model(s, m).point_doubles, 0)
            for s in ("binary", "naf")]
    for scheme in ("wnaf", "complement_window"):
        for w in widths:
            cm = cost_model(scheme, m, w)
            rows.append(TableRow(scheme, w, cm.point_adds_int, cm.point_doubles, cm.precomp_count))
    return rows


def format_table(rows: Sequence[TableRow], fmt: str = "md") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["scheme", "w", "point_adds", "point_doubles", "precomp"])
        for r in rows:
            w.writerow([r.scheme, _fmt(r.w), r.point_adds, r.point_doubles, r.precomp])
        return buf.getvalue()
    lines = ["| Scheme | Window size | # PA | # PD | Pre-computations |", "|---|---|---|---|---|"]
    for r in rows:
        lines.append(f"| {r.scheme} | {'-' if r.w is None else r.w} | {r.point_adds} | "
                     f"{r.point_doubles} | {r.precomp} |")
    return "\n".join(lines) + "\n"
