"""Polynomials over GF(2) packed into Python ints (bit i = coefficient of x^i)."""

from .errors import DomainError

# A BitPoly is a non-negative int; bit i holds the coefficient of x^i.
BitPoly = int


def degree(p: BitPoly):
    """Degree of p, or None for the zero polynomial."""
    return p.bit_length() - 1 if p else None


def weight(p: BitPoly) -> int:
    """Number of nonzero coefficients."""
    return bin(p).count("1")


def poly_mul(a: BitPoly, b: BitPoly) -> BitPoly:
    """Carry-less product of two GF(2) polynomials."""
    if a == 0 or b == 0:
        return 0
    if weight(a) > weight(b):
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def poly_divmod(a: BitPoly, b: BitPoly):
    """Quotient and remainder of a by b (b != 0)."""
    if b == 0:
        raise DomainError("division by zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: BitPoly, b: BitPoly) -> BitPoly:
    """Remainder of a modulo b."""
    return poly_divmod(a, b)[1]


def poly_gcd(a: BitPoly, b: BitPoly) -> BitPoly:
    """Greatest common divisor (monic by construction over GF(2))."""
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_mulmod(a: BitPoly, b: BitPoly, m: BitPoly) -> BitPoly:
    """a*b mod m."""
    return poly_mod(poly_mul(a, b), m)


def poly_powmod(a: BitPoly, e: int, m: BitPoly) -> BitPoly:
    """a^e mod m for e >= 0."""
    result = poly_mod(1, m)
    a = poly_mod(a, m)
    while e:
        if e & 1:
            result = poly_mulmod(result, a, m)
        a = poly_mulmod(a, a, m)
        e >>= 1
    return result


def is_irreducible(f: BitPoly) -> bool:
    """Rabin test: x^(2^n) == x mod f and gcd(x^(2^(n/q)) - x, f) = 1 for prime q | n."""
    n = degree(f)
    if n is None or n == 0:
        return False
    if n == 1:
        return True
    x = 2
    # x^(2^k) mod f by repeated squaring, saving intermediate stages.
    stages = [x]
    t = x
    for _ in range(n):
        t = poly_mulmod(t, t, f)
        stages.append(t)
    if stages[n] != poly_mod(x, f):
        return False
    k = n
    primes = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            primes.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        primes.append(k)
    for q in primes:
        if poly_gcd(stages[n // q] ^ x, f) != 1:
            return False
    return True


def min_irreducible(n: int) -> BitPoly:
    """Deterministic irreducible of degree n: fewest terms, then least bit-packed value."""
    if n < 1:
        raise DomainError("degree must be positive")
    if n == 1:
        return 0b11  # 1 + x
    top = (1 << n) | 1
    from itertools import combinations
    for extra in range(1, n, 2):  # term counts 3, 5, 7, ...
        cands = sorted(sum(1 << e for e in combo) | top
                       for combo in combinations(range(1, n), extra))
        for f in cands:
            if is_irreducible(f):
                return f
    raise DomainError(f"no irreducible of degree {n} found")  # unreachable


def to_hex(p: BitPoly) -> str:
    """Serialize as lowercase hex of the little-endian byte string."""
    nbytes = max(1, (p.bit_length() + 7) // 8)
    return p.to_bytes(nbytes, "little").hex()


def to_human(p: BitPoly) -> str:
    """Serialize as a human-readable sum of monomials, e.g. '1+x+x^4'."""
    if p == 0:
        return "0"
    terms = []
    for i in range(p.bit_length()):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return "+".join(terms)


def parse(s: str) -> BitPoly:
    """Parse either serialization: hex ('13') or human ('1+x+x^4')."""
    s = s.strip()
    if not s:
        raise DomainError("empty polynomial string")
    if any(c in s for c in "x+^ ") or s == "0" or s == "1":
        return _parse_human(s)
    try:
        raw = bytes.fromhex(s)
    except ValueError as exc:
        raise DomainError(f"not a valid polynomial string: {s!r}") from exc
    return int.from_bytes(raw, "little")


def _parse_human(s: str) -> BitPoly:
    p = 0
    for term in s.replace(" ", "").split("+"):
        if term == "0":
            continue
        if term == "1":
            i = 0
        elif term == "x":
            i = 1
        elif term.startswith("x^"):
            i = int(term[2:])
            if i < 0:
                raise DomainError(f"negative exponent in {s!r}")
        else:
            raise DomainError(f"bad monomial {term!r} in {s!r}")
        p ^= 1 << i
    return p
