"""Scalar recodings and their analytic cost model.

Every recoding returns a :class:`SignedDigitString` whose digit ``i`` is the
coefficient of ``2**i``; multipliers read it most-significant digit first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import UsageError

SCHEMES = ("binary", "naf", "wnaf", "complement_window")


@dataclass(frozen=True)
class SignedDigitString:
    digits: Tuple[int, ...]
    scheme: str
    width_w: int = 1
    source_bits: int = 0
    # complement_window only: True when built from 2^m - C1 - 1
    complemented: bool = False

    def __len__(self):
        return len(self.digits)

    def value(self) -> int:
        return sum(d << i for i, d in enumerate(self.digits))

    def nonzero_count(self) -> int:
        return sum(1 for d in self.digits if d)

    def msb_first(self) -> Tuple[int, ...]:
        return tuple(reversed(self.digits))


def _check_scalar(k: int) -> None:
    if k < 0:
        raise UsageError("scalar must be non-negative")


def recode_binary(k: int) -> SignedDigitString:
    _check_scalar(k)
    digits = tuple((k >> i) & 1 for i in range(k.bit_length()))
    return SignedDigitString(digits, "binary", 1, k.bit_length())


def _wnaf_digits(k: int, w: int) -> list:
    digits = []
    mod, half = 1 << w, 1 << (w - 1)
    while k:
        if k & 1:
            u = k & (mod - 1)
            if u >= half:
                u -= mod
            k -= u
        else:
            u = 0
        digits.append(u)
        k >>= 1
    return digits


def recode_naf(k: int) -> SignedDigitString:
    _check_scalar(k)
    return SignedDigitString(tuple(_wnaf_digits(k, 2)), "naf", 1, k.bit_length())


def recode_wnaf(k: int, w: int) -> SignedDigitString:
    """Width-w NAF: odd digits with |u| < 2^(w-1), at most one nonzero per w positions."""
    _check_scalar(k)
    if w < 2:
        raise UsageError("wNAF width must be at least 2")
    return SignedDigitString(tuple(_wnaf_digits(k, w)), "wnaf", w, k.bit_length())


def ones_complement(k: int, m: int) -> int:
    """C1 = (2^m - 1) - k, so that k = 2^m - C1 - 1."""
    if not 0 <= k < (1 << m):
        raise UsageError(f"{k} does not fit in {m} bits")
    return ((1 << m) - 1) - k


def _split(k: int, low: list, n: int) -> Tuple[list, int]:
    low = low[:n] + [0] * (n - len(low[:n]))
    rest = k - sum(d << i for i, d in enumerate(low))
    assert rest % (1 << n) == 0
    return low, rest >> n


def _adds_needed(low: list, lead: int) -> int:
    nz = sum(1 for d in low if d)
    if lead == 0:
        return nz - 1
    return nz + (lead % 2 == 0)


def recode_complement_window(k: int, m: int, w: int) -> SignedDigitString:
    """Windowed recoding with a fixed w-bit leading window.

    The low ``m - w`` positions carry a width-(w+1) signed window expansion
    (odd digits, |d| < 2^w, at least w zeros between nonzero digits), taken
    either from k directly or from the complement form k = 2^m - C1 - 1,
    whichever needs fewer additions. Position ``m - w`` holds the leading
    window value in [0, 2^w]. Horner evaluation therefore performs exactly
    ``m - w`` doublings once the leading value is loaded.
    """
    _check_scalar(k)
    if w < 2:
        raise UsageError("window width must be at least 2")
    if w >= m:
        raise UsageError("window width must be smaller than the scalar length")
    if k >= 1 << m:
        raise UsageError(f"scalar does not fit in {m} bits")
    n = m - w

    low, lead = _split(k, _wnaf_digits(k, w + 1), n)
    best = (low, lead, False)
    c1 = ones_complement(k, m)
    comp = [-d for d in _wnaf_digits(c1 + 1, w + 1)]
    c_low, c_lead = _split(k, comp, n)
    if 0 <= c_lead <= 1 << w and _adds_needed(c_low, c_lead) < _adds_needed(low, lead):
        best = (c_low, c_lead, True)
    low, lead, complemented = best
    if not 0 <= lead <= 1 << w:
        raise AssertionError(f"leading window {lead} out of range")
    return SignedDigitString(tuple(low) + (lead,), "complement_window", w, m, complemented)


def recode(k: int, scheme: str, w: Optional[int] = None, m: Optional[int] = None) -> SignedDigitString:
    if scheme == "binary":
        return recode_binary(k)
    if scheme == "naf":
        return recode_naf(k)
    if scheme == "wnaf":
        return recode_wnaf(k, w)
    if scheme == "complement_window":
        if m is None:
            m = max(k.bit_length(), w + 1)
        return recode_complement_window(k, m, w)
    raise UsageError(f"unknown recoding scheme {scheme!r}")


@dataclass(frozen=True)
class CostModel:
    """Analytic point-operation counts for one m-bit scalar.

    ``point_adds`` is exact (a Fraction); tables that list integers use
    :attr:`point_adds_int`, the ceiling. ``precomp_count`` is the number of
    precomputed multiples as the windowed tables list it; ``table2_precomp``
    is the ``2^(w-1) - 1`` figure of the representation comparison, where
    that comparison lists one.
    """

    scheme: str
    m: int
    width_w: Optional[int]
    point_adds: Fraction
    point_doubles: int
    precomp_count: int
    table2_precomp: Optional[int] = None

    @property
    def point_adds_int(self) -> int:
        return math.ceil(self.point_adds)


def cost_model(scheme: str, m: int, w: Optional[int] = None) -> CostModel:
    if m < 1:
        raise UsageError("m must be positive")
    if scheme in ("wnaf", "complement_window") and (w is None or w < 2):
        raise UsageError(f"{scheme} needs a width w >= 2")
    if scheme == "binary":
        return CostModel(scheme, m, None, Fraction(m, 2), m, 0)
    if scheme == "naf":
        return CostModel(scheme, m, None, Fraction(m, 3), m + 1, 0)
    if scheme == "wnaf":
        pre = 2 ** (w - 1) - 1
        return CostModel(scheme, m, w, Fraction(m, w + 1), m + 1, pre, pre)
    if scheme == "complement_window":
        if w >= m:
            raise UsageError("window width must be smaller than m")
        return CostModel(scheme, m, w, Fraction(m, w + 1), m - w, 2**w - 1, 2 ** (w - 1) - 1)
    raise UsageError(f"unknown recoding scheme {scheme!r}")
