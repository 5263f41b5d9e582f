"""Prime-field arithmetic GF(p) in Montgomery form.

Residues are stored as Python integers; :attr:`FpElement.limbs` exposes the
little-endian limb vector for the configured limb width. Two multiplication
kernels compute the same Montgomery product ``a * b * R^-1 mod p``:

``"cios"``
    word-by-word Coarsely Integrated Operand Scanning over ``limb_bits``-wide
    limbs (16 bits mirrors a C54x data word).
``"redc"``
    a single whole-width REDC step on Python integers. Same R, same outputs,
    much faster in CPython; the curve fixtures use it by default.

Nothing here is constant time.
"""

from __future__ import annotations

from typing import List

from sympy import isprime

from . import counter as _counter
from .errors import NotInvertibleError, UsageError

LIMB_WIDTHS = (16, 32, 64)
MAX_BITS = 192
KERNELS = ("cios", "redc")


def to_limbs(x: int, limb_bits: int, num_limbs: int) -> List[int]:
    mask = (1 << limb_bits) - 1
    return [(x >> (limb_bits * i)) & mask for i in range(num_limbs)]


def from_limbs(limbs: List[int], limb_bits: int) -> int:
    x = 0
    for limb in reversed(limbs):
        x = (x << limb_bits) | limb
    return x


def cios_mont_mul(a: List[int], b: List[int], p: List[int], n0: int, limb_bits: int) -> List[int]:
    """Montgomery product of limb vectors, CIOS form.

    ``n0`` is ``-p^-1 mod 2^limb_bits``. Returns the fully reduced result as a
    limb vector of the same length.
    """
    s = len(p)
    mask = (1 << limb_bits) - 1
    t = [0] * (s + 2)
    for i in range(s):
        bi = b[i]
        c = 0
        for j in range(s):
            uv = t[j] + a[j] * bi + c
            t[j] = uv & mask
            c = uv >> limb_bits
        uv = t[s] + c
        t[s] = uv & mask
        t[s + 1] = uv >> limb_bits

        m = (t[0] * n0) & mask
        c = (t[0] + m * p[0]) >> limb_bits
        for j in range(1, s):
            uv = t[j] + m * p[j] + c
            t[j - 1] = uv & mask
            c = uv >> limb_bits
        uv = t[s] + c
        t[s - 1] = uv & mask
        t[s] = t[s + 1] + (uv >> limb_bits)
        t[s + 1] = 0

    # t < 2p here; one conditional subtraction with borrow
    res = t[: s + 1]
    borrow = 0
    diff = []
    for j in range(s + 1):
        pj = p[j] if j < s else 0
        v = res[j] - pj - borrow
        borrow = 1 if v < 0 else 0
        diff.append(v & mask)
    if borrow == 0:
        res = diff
    return res[:s]


class FpParams:
    """Immutable description of GF(p) and its Montgomery constants."""

    __slots__ = (
        "p", "limb_bits", "num_limbs", "R", "R2", "n_prime", "kernel",
        "_rbits", "_rmask", "_n_prime_full", "_p_limbs", "zero", "one",
    )

    def __init__(self, p: int, limb_bits: int = 16, kernel: str = "cios"):
        if p <= 3 or p % 2 == 0:
            raise UsageError(f"modulus must be an odd prime > 3, got {p}")
        if p.bit_length() > MAX_BITS:
            raise UsageError(f"modulus exceeds {MAX_BITS} bits")
        if not isprime(p):
            raise UsageError(f"modulus {p:#x} is not prime")
        if limb_bits not in LIMB_WIDTHS:
            raise UsageError(f"limb_bits must be one of {LIMB_WIDTHS}")
        if kernel not in KERNELS:
            raise UsageError(f"unknown kernel {kernel!r}")
        self.p = p
        self.limb_bits = limb_bits
        self.num_limbs = -(-p.bit_length() // limb_bits)
        self._rbits = limb_bits * self.num_limbs
        self._rmask = (1 << self._rbits) - 1
        self.R = 1 << self._rbits
        self.R2 = self.R * self.R % p
        self.n_prime = -pow(p, -1, 1 << limb_bits) % (1 << limb_bits)
        self._n_prime_full = -pow(p, -1, self.R) % self.R
        self._p_limbs = to_limbs(p, limb_bits, self.num_limbs)
        self.kernel = kernel
        self.zero = FpElement(0, self, True)
        self.one = FpElement(self.R % p, self, True)

    def __eq__(self, other):
        if not isinstance(other, FpParams):
            return NotImplemented
        return self.p == other.p and self.limb_bits == other.limb_bits

    def __hash__(self):
        return hash((self.p, self.limb_bits))

    def __repr__(self):
        return f"FpParams(p={self.p:#x}, limb_bits={self.limb_bits}, kernel={self.kernel!r})"

    @property
    def bits(self) -> int:
        return self.p.bit_length()

    def redc_product(self, x: int, y: int) -> int:
        """Raw Montgomery product of residues; not counted."""
        if self.kernel == "redc":
            t = x * y
            m = ((t & self._rmask) * self._n_prime_full) & self._rmask
            u = (t + m * self.p) >> self._rbits
            return u - self.p if u >= self.p else u
        lb, n = self.limb_bits, self.num_limbs
        r = cios_mont_mul(to_limbs(x, lb, n), to_limbs(y, lb, n), self._p_limbs, self.n_prime, lb)
        return from_limbs(r, lb)

    def plain(self, x: int) -> "FpElement":
        return FpElement(x % self.p, self, False)

    def __call__(self, x: int) -> "FpElement":
        """Montgomery-domain element for the integer ``x``."""
        return to_mont(self.plain(x))

    def random(self, rng) -> "FpElement":
        return self(rng.randrange(self.p))


class FpElement:
    """Residue modulo p, in Montgomery or plain domain.

    ``value`` holds the stored residue (``a*R mod p`` in the Montgomery
    domain). ``int(x)`` always returns the represented integer.
    """

    __slots__ = ("value", "params", "mont")

    def __init__(self, value: int, params: FpParams, mont: bool = True):
        self.value = value
        self.params = params
        self.mont = mont

    @property
    def limbs(self) -> List[int]:
        pr = self.params
        return to_limbs(self.value, pr.limb_bits, pr.num_limbs)

    @property
    def domain(self) -> str:
        return "montgomery" if self.mont else "plain"

    def __int__(self):
        if self.mont:
            return self.params.redc_product(self.value, 1)
        return self.value

    def __eq__(self, other):
        if not isinstance(other, FpElement):
            return NotImplemented
        return self.value == other.value and self.mont == other.mont and self.params == other.params

    def __hash__(self):
        return hash((self.value, self.mont, self.params.p))

    def __repr__(self):
        return f"Fp({int(self):#x})"

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other):
        return fp_add(self, other)

    def __sub__(self, other):
        return fp_sub(self, other)

    def __neg__(self):
        return fp_sub(self.params.zero if self.mont else self.params.plain(0), self)

    def __mul__(self, other):
        return mont_mul(self, other)

    def square(self):
        return mont_sqr(self)

    def mul_const(self, c):
        return mul_const(self, c)

    def inv(self):
        return fp_inv(self)


def _check(a: FpElement, b: FpElement) -> None:
    if a.params is not b.params and a.params != b.params:
        raise UsageError("operands belong to different fields")
    if a.mont != b.mont:
        raise UsageError("operands are in different domains")


def _tally(name: str) -> None:
    c = _counter._active.get()
    if c is not None:
        setattr(c, name, getattr(c, name) + 1)


def fp_add(a: FpElement, b: FpElement) -> FpElement:
    _check(a, b)
    p = a.params.p
    s = a.value + b.value
    if s >= p:
        s -= p
    assert 0 <= s < p
    c = _counter._active.get()
    if c is not None:
        c.field_add_sub += 1
    return FpElement(s, a.params, a.mont)


def fp_sub(a: FpElement, b: FpElement) -> FpElement:
    _check(a, b)
    s = a.value - b.value
    if s < 0:
        s += a.params.p
    assert 0 <= s < a.params.p
    c = _counter._active.get()
    if c is not None:
        c.field_add_sub += 1
    return FpElement(s, a.params, a.mont)


def to_mont(a: FpElement) -> FpElement:
    if a.mont:
        raise UsageError("element is already in the Montgomery domain")
    pr = a.params
    return FpElement(pr.redc_product(a.value, pr.R2), pr, True)


def from_mont(a: FpElement) -> FpElement:
    if not a.mont:
        raise UsageError("element is already in the plain domain")
    return FpElement(a.params.redc_product(a.value, 1), a.params, False)


def _mont_product(a: FpElement, b: FpElement) -> FpElement:
    _check(a, b)
    if not a.mont:
        raise UsageError("Montgomery multiplication needs Montgomery-domain operands")
    r = a.params.redc_product(a.value, b.value)
    assert 0 <= r < a.params.p
    return FpElement(r, a.params, True)


def mont_mul(a: FpElement, b: FpElement) -> FpElement:
    r = _mont_product(a, b)
    c = _counter._active.get()
    if c is not None:
        c.field_mul += 1
    return r


def mont_sqr(a: FpElement) -> FpElement:
    r = _mont_product(a, a)
    c = _counter._active.get()
    if c is not None:
        c.field_sqr += 1
    return r


def mul_const(a: FpElement, const: FpElement) -> FpElement:
    """Multiplication by a curve constant, tallied as ``const_mul``."""
    r = _mont_product(a, const)
    c = _counter._active.get()
    if c is not None:
        c.const_mul += 1
    return r


def binary_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo odd ``p`` by the binary extended Euclidean algorithm."""
    if a % p == 0:
        raise NotInvertibleError("zero has no inverse")
    u, v = a % p, p
    x1, x2 = 1, 0
    while u != 1 and v != 1:
        while u & 1 == 0:
            u >>= 1
            x1 = x1 >> 1 if x1 & 1 == 0 else (x1 + p) >> 1
        while v & 1 == 0:
            v >>= 1
            x2 = x2 >> 1 if x2 & 1 == 0 else (x2 + p) >> 1
        if u >= v:
            u -= v
            x1 -= x2
        else:
            v -= u
            x2 -= x1
    return (x1 if u == 1 else x2) % p


def fp_inv(a: FpElement) -> FpElement:
    if a.value == 0:
        raise NotInvertibleError("zero has no inverse")
    _tally("field_inv")
    if not a.mont:
        return FpElement(binary_inverse(a.value, a.params.p), a.params, False)
    plain = from_mont(a)
    return to_mont(FpElement(binary_inverse(plain.value, a.params.p), a.params, False))
