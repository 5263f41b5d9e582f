"""Elliptic-curve scalar multiplication with operation counting.

Prime-field (Montgomery) and binary-field arithmetic, Jacobian, Lopez-Dahab,
Edwards and inverted Edwards point formulas, scalar recodings, and a
benchmark CLI that reports point and field operation counts.
"""

from .counter import CounterReport, OpCounter, counter_report, counting
from .curves import BUILTIN_CURVES, load_curve
from .errors import (
    ConfigError, CorruptionError, ExceptionalPointError, NotInvertibleError, NotOnCurveError, UsageError,
)
from .points import INFINITY, AffinePoint
from .recode import cost_model, recode
from .scalarmul import Multiplier, MultiplierConfig, PrecompTable, build_precomp, make_system, scalar_mul

__all__ = [
    "AffinePoint", "BUILTIN_CURVES", "ConfigError", "CorruptionError", "CounterReport",
    "ExceptionalPointError", "INFINITY", "Multiplier", "MultiplierConfig", "NotInvertibleError",
    "NotOnCurveError", "OpCounter", "PrecompTable", "UsageError", "build_precomp", "cost_model",
    "counter_report", "counting", "load_curve", "make_system", "recode", "scalar_mul",
]
