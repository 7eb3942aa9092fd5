"""Binary field contexts F_2[x]/(f) with elements packed into ints."""

import os

from sympy import factorint

from . import bitpoly
from .errors import DomainError, InvalidElementError, UnsupportedDegreeError

DEFAULT_MAX_N = 64

# An element of F_{2^n} is an int in [0, 2^n); bit i = coefficient of x^i.
Gf2nElem = int


def max_degree() -> int:
    """Configured degree cap (env CHARFIELD2_MAX_N, default 64)."""
    raw = os.environ.get("CHARFIELD2_MAX_N", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_N
    except ValueError:
        return DEFAULT_MAX_N


class FieldCtx:
    """Arithmetic context for F_2[x]/(modulus), modulus irreducible of degree n."""

    def __init__(self, modulus: int, check_irreducible: bool = True):
        deg = bitpoly.degree(modulus)
        if deg is None or deg == 0:
            raise DomainError("modulus must be non-constant")
        if deg > max_degree():
            raise UnsupportedDegreeError(
                f"degree {deg} exceeds cap {max_degree()} (set CHARFIELD2_MAX_N)")
        if check_irreducible and not bitpoly.is_irreducible(modulus):
            raise DomainError(f"modulus {bitpoly.to_human(modulus)} is not irreducible")
        self.n = deg
        self.modulus = modulus
        self.mask = (1 << deg) - 1
        # reduction[i] = x^(n+i) mod f, enough to fold a (2n-1)-bit product
        xn = modulus & self.mask  # x^n mod f
        red = []
        t = xn
        for _ in range(deg):
            red.append(t)
            t <<= 1
            if t >> deg:
                t = (t & self.mask) ^ xn
        self.reduction = red
        self._order_factors = None

    @property
    def order(self) -> int:
        """Size of the multiplicative group, 2^n - 1."""
        return (1 << self.n) - 1

    @property
    def order_factors(self):
        """Sorted prime factors of 2^n - 1 (computed once on demand)."""
        if self._order_factors is None:
            self._order_factors = tuple(sorted(factorint(self.order)))
        return self._order_factors

    def __repr__(self):
        return f"FieldCtx(n={self.n}, modulus={bitpoly.to_human(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("FieldCtx", self.modulus))


def validate(ctx: FieldCtx, a: int) -> int:
    """Check a is a valid coordinate vector for ctx, return it."""
    if not isinstance(a, int) or a < 0 or a > ctx.mask:
        raise InvalidElementError(f"element {a!r} out of range for n={ctx.n}")
    return a


def poly_mul_mod(ctx: FieldCtx, a: int, b: int) -> int:
    """Field product of a and b."""
    validate(ctx, a)
    validate(ctx, b)
    prod = bitpoly.poly_mul(a, b)
    return reduce_product(ctx, prod)


def reduce_product(ctx: FieldCtx, prod: int) -> int:
    """Reduce a raw carry-less product (up to 2n-1 bits) modulo the field modulus."""
    n = ctx.n
    high = prod >> n
    out = prod & ctx.mask
    red = ctx.reduction
    while high:
        low = high & -high
        out ^= red[low.bit_length() - 1]
        high ^= low
    return out


def square(ctx: FieldCtx, a: int) -> int:
    """Field square of a."""
    return poly_mul_mod(ctx, a, a)


def power(ctx: FieldCtx, a: int, e: int) -> int:
    """a^e for e >= 0 (0^0 = 1)."""
    validate(ctx, a)
    result = 1
    base = a
    while e:
        if e & 1:
            result = poly_mul_mod(ctx, result, base)
        base = poly_mul_mod(ctx, base, base)
        e >>= 1
    return result


def inverse(ctx: FieldCtx, a: int) -> int:
    """Multiplicative inverse of nonzero a."""
    if a == 0:
        raise DomainError("zero has no inverse")
    return power(ctx, a, ctx.order - 1)


def frobenius(ctx: FieldCtx, a: int, k: int = 1) -> int:
    """a^(2^k); the Frobenius automorphism applied k times (k mod n)."""
    validate(ctx, a)
    for _ in range(k % ctx.n):
        a = poly_mul_mod(ctx, a, a)
    return a


def trace(ctx: FieldCtx, a: int) -> int:
    """Absolute trace of a into F_2, returned as 0 or 1."""
    validate(ctx, a)
    t = 0
    cur = a
    for _ in range(ctx.n):
        t ^= cur
        cur = poly_mul_mod(ctx, cur, cur)
    if t not in (0, 1):
        raise AssertionError("trace landed outside F_2")
    return t


def multiplicative_order(ctx: FieldCtx, a: int) -> int:
    """Order of a in the multiplicative group (a != 0)."""
    validate(ctx, a)
    if a == 0:
        raise DomainError("zero has no multiplicative order")
    t = ctx.order
    for p in ctx.order_factors:
        while t % p == 0 and power(ctx, a, t // p) == 1:
            t //= p
    return t


def is_primitive(ctx: FieldCtx, a: int) -> bool:
    """True iff a generates the multiplicative group."""
    if a == 0:
        return False
    return multiplicative_order(ctx, a) == ctx.order


def is_cube(ctx: FieldCtx, a: int) -> bool:
    """True iff a = c^3 for some c; via a^((2^n-1)/3) when 3 divides 2^n - 1."""
    validate(ctx, a)
    if a == 0:
        return True
    if ctx.order % 3 != 0:
        return True  # cubing is a bijection on the multiplicative group
    return power(ctx, a, ctx.order // 3) == 1


def solve_artin_schreier(ctx: FieldCtx, c: int):
    """All y with y^2 + y = c, sorted ascending ([] when trace(c) = 1)."""
    from .linalg import solve_linear

    validate(ctx, c)
    rows = []
    for i in range(ctx.n):
        e = 1 << i
        rows.append(poly_mul_mod(ctx, e, e) ^ e)
    y = solve_linear(rows, ctx.n, c)
    if y is None:
        return []
    return sorted((y, y ^ 1))


def elem_to_hex(ctx: FieldCtx, a: int) -> str:
    """Fixed-width little-endian hex of an element's coordinate bits."""
    validate(ctx, a)
    return a.to_bytes((ctx.n + 7) // 8, "little").hex()


def elem_parse(ctx: FieldCtx, s: str) -> int:
    """Parse an element from hex or human polynomial form."""
    a = bitpoly.parse(s)
    return validate(ctx, a)
