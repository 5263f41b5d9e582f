"""Curve parameter files and the builtin curve set.

A curve file holds ``key = value`` lines; values are decimal or ``0x`` hex,
``#`` starts a comment. ``model`` selects the curve family:

    weierstrass   p, a, b, gx, gy, n, h
    binary        f2m_poly, a, b, gx, gy, n, h
    edwards       p, d, gx, gy, n, h, optional c (default 1)

``name`` is free text.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Dict, Union

from .edwards import EdwardsCurve
from .errors import ConfigError, NotOnCurveError, UsageError
from .f2m import F2mParams
from .fp import FpParams
from .ld import BinaryCurve
from .weierstrass import WeierstrassCurve

BUILTIN_CURVES = ("secp160r1", "sect163r2", "edwards160", "toy_w23", "toy_ed13", "toy_b3")

_REQUIRED = {
    "weierstrass": ("p", "a", "b", "gx", "gy", "n", "h"),
    "binary": ("f2m_poly", "a", "b", "gx", "gy", "n", "h"),
    "edwards": ("p", "d", "gx", "gy", "n", "h"),
}
_OPTIONAL = {"edwards": ("c",)}


def parse_config(text: str, source: str = "<config>") -> Dict[str, Union[int, str]]:
    out: Dict[str, Union[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip().lower(), value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        if key in ("model", "name"):
            out[key] = value
            continue
        try:
            out[key] = int(value, 0)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: {key} is not an integer: {value!r}") from None
    model = out.get("model")
    if model not in _REQUIRED:
        raise ConfigError(f"{source}: model must be one of {sorted(_REQUIRED)}, got {model!r}")
    allowed = set(_REQUIRED[model]) | set(_OPTIONAL.get(model, ())) | {"model", "name"}
    missing = [k for k in _REQUIRED[model] if k not in out]
    if missing:
        raise ConfigError(f"{source}: missing keys {missing}")
    unknown = sorted(set(out) - allowed)
    if unknown:
        raise ConfigError(f"{source}: unknown keys {unknown}")
    return out


def curve_from_config(cfg: Dict[str, Union[int, str]], limb_bits: int = 16, kernel: str = "redc"):
    model = cfg["model"]
    name = str(cfg.get("name", ""))
    try:
        if model == "binary":
            field = F2mParams(cfg["f2m_poly"])
            return BinaryCurve(field, cfg["a"], cfg["b"], cfg["gx"], cfg["gy"], cfg["n"], cfg["h"], name)
        field = FpParams(cfg["p"], limb_bits, kernel)
        if model == "weierstrass":
            return WeierstrassCurve(field, cfg["a"], cfg["b"], cfg["gx"], cfg["gy"], cfg["n"], cfg["h"], name)
        return EdwardsCurve(field, cfg["d"], cfg["gx"], cfg["gy"], cfg["n"], cfg["h"],
                            c=cfg.get("c", 1), name=name)
    except NotOnCurveError as exc:
        raise ConfigError(f"generator-on-curve check failed for {name or model}: {exc}") from exc
    except UsageError as exc:
        raise ConfigError(f"invalid parameters for {name or model}: {exc}") from exc


def read_config(name_or_path: str) -> Dict[str, Union[int, str]]:
    if name_or_path in BUILTIN_CURVES:
        text = resources.files("ecbench.data").joinpath(f"{name_or_path}.cfg").read_text()
        return parse_config(text, name_or_path)
    path = Path(name_or_path)
    if not path.is_file():
        raise ConfigError(f"no builtin curve or file named {name_or_path!r}")
    return parse_config(path.read_text(), str(path))


def load_curve(name_or_path: str, limb_bits: int = 16, kernel: str = "redc"):
    """Curve object for a builtin name or a config file path."""
    return curve_from_config(read_config(name_or_path), limb_bits, kernel)
