"""Binary-field arithmetic GF(2^m) in polynomial basis.

Elements are bit vectors held in Python integers (bit i is the coefficient
of x^i). Multiplication is a left-to-right comb with a 4-bit window;
reduction folds the high part through the sparse tail of the modulus.
"""

from __future__ import annotations

from typing import List, Tuple

from . import counter as _counter
from .errors import NotInvertibleError, UsageError

IRREDUCIBILITY_CHECK_MAX_M = 32


def poly_degree(f: int) -> int:
    return f.bit_length() - 1


def poly_mod(a: int, f: int) -> int:
    df = f.bit_length()
    while a.bit_length() >= df:
        a ^= f << (a.bit_length() - df)
    return a


def is_irreducible_exhaustive(f: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(f)//2."""
    m = poly_degree(f)
    if m < 1:
        return False
    for g in range(2, 1 << (m // 2 + 1)):
        if poly_mod(f, g) == 0:
            return False
    return True


def _spread_table() -> List[int]:
    table = []
    for b in range(256):
        s = 0
        for i in range(8):
            if b >> i & 1:
                s |= 1 << (2 * i)
        table.append(s)
    return table


_SPREAD = _spread_table()


class F2mParams:
    """GF(2^m) defined by an irreducible ``reduction_poly`` of degree m."""

    __slots__ = ("m", "reduction_poly", "_tail", "_mask", "zero", "one")

    def __init__(self, reduction_poly: int, check: bool = True):
        m = poly_degree(reduction_poly)
        if m < 2:
            raise UsageError("reduction polynomial must have degree >= 2")
        if not reduction_poly & 1:
            raise UsageError("reduction polynomial needs a nonzero constant term")
        if check and m <= IRREDUCIBILITY_CHECK_MAX_M and not is_irreducible_exhaustive(reduction_poly):
            raise UsageError(f"reduction polynomial {reduction_poly:#x} is reducible")
        self.m = m
        self.reduction_poly = reduction_poly
        self._mask = (1 << m) - 1
        # exponents of f - x^m; x^m == sum(x^e) mod f
        self._tail: Tuple[int, ...] = tuple(e for e in range(m) if reduction_poly >> e & 1)
        self.zero = F2mElement(0, self)
        self.one = F2mElement(1, self)

    def __eq__(self, other):
        if not isinstance(other, F2mParams):
            return NotImplemented
        return self.reduction_poly == other.reduction_poly

    def __hash__(self):
        return hash(self.reduction_poly)

    def __repr__(self):
        return f"F2mParams(m={self.m}, poly={self.reduction_poly:#x})"

    def __call__(self, bits: int) -> "F2mElement":
        if bits < 0:
            raise UsageError("negative bit vector")
        return F2mElement(self.reduce(bits), self)

    def random(self, rng) -> "F2mElement":
        return F2mElement(rng.getrandbits(self.m), self)

    def reduce(self, a: int) -> int:
        m, mask, tail = self.m, self._mask, self._tail
        while a >> m:
            hi = a >> m
            a &= mask
            for e in tail:
                a ^= hi << e
        return a


class F2mElement:
    __slots__ = ("bits", "params")

    def __init__(self, bits: int, params: F2mParams):
        self.bits = bits
        self.params = params

    def __eq__(self, other):
        if not isinstance(other, F2mElement):
            return NotImplemented
        return self.bits == other.bits and self.params == other.params

    def __hash__(self):
        return hash((self.bits, self.params.reduction_poly))

    def __repr__(self):
        return f"F2m({self.bits:#x})"

    def __int__(self):
        return self.bits

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other):
        return f2m_add(self, other)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return f2m_mul(self, other)

    def square(self):
        return f2m_sqr(self)

    def mul_const(self, c):
        return f2m_mul_const(self, c)

    def inv(self):
        return f2m_inv(self)


def _check(a: F2mElement, b: F2mElement) -> None:
    if a.params is not b.params and a.params != b.params:
        raise UsageError("operands belong to different fields")


def clmul_comb(a: int, b: int) -> int:
    """Carry-less product, left-to-right comb over 4-bit windows of ``b``."""
    if a == 0 or b == 0:
        return 0
    table = [0] * 16
    table[1] = a
    for u in range(2, 16):
        table[u] = table[u >> 1] << 1 if u & 1 == 0 else table[u - 1] ^ a
    r = 0
    for shift in range((b.bit_length() + 3) // 4 * 4 - 4, -1, -4):
        r = (r << 4) ^ table[(b >> shift) & 0xF]
    return r


def spread_square(a: int) -> int:
    """Insert a zero between consecutive bits: the unreduced square."""
    r = 0
    i = 0
    while a:
        r |= _SPREAD[a & 0xFF] << i
        a >>= 8
        i += 16
    return r


def f2m_add(a: F2mElement, b: F2mElement) -> F2mElement:
    _check(a, b)
    c = _counter._active.get()
    if c is not None:
        c.field_add_sub += 1
    return F2mElement(a.bits ^ b.bits, a.params)


def _product(a: F2mElement, b: F2mElement) -> F2mElement:
    _check(a, b)
    r = a.params.reduce(clmul_comb(a.bits, b.bits))
    assert r >> a.params.m == 0
    return F2mElement(r, a.params)


def f2m_mul(a: F2mElement, b: F2mElement) -> F2mElement:
    r = _product(a, b)
    c = _counter._active.get()
    if c is not None:
        c.field_mul += 1
    return r


def f2m_mul_const(a: F2mElement, const: F2mElement) -> F2mElement:
    r = _product(a, const)
    c = _counter._active.get()
    if c is not None:
        c.const_mul += 1
    return r


def f2m_sqr(a: F2mElement) -> F2mElement:
    r = a.params.reduce(spread_square(a.bits))
    c = _counter._active.get()
    if c is not None:
        c.field_sqr += 1
    return F2mElement(r, a.params)


def poly_inverse(a: int, f: int) -> int:
    """Inverse of ``a`` modulo irreducible ``f`` by the polynomial extended Euclid."""
    if a == 0:
        raise NotInvertibleError("zero has no inverse")
    u, v = a, f
    g1, g2 = 1, 0
    while u != 1:
        j = u.bit_length() - v.bit_length()
        if j < 0:
            u, v = v, u
            g1, g2 = g2, g1
            j = -j
        u ^= v << j
        g1 ^= g2 << j
    return g1


def f2m_inv(a: F2mElement) -> F2mElement:
    if a.bits == 0:
        raise NotInvertibleError("zero has no inverse")
    c = _counter._active.get()
    if c is not None:
        c.field_inv += 1
    return F2mElement(a.params.reduce(poly_inverse(a.bits, a.params.reduction_poly)), a.params)
