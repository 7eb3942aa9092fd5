"""Normal bases of F_{2^n} over F_2: construction, tables, weights, cross sums.

A normal basis is (a, a^2, a^4, ..., a^(2^(n-1))) for a normal element a.
Coordinates relative to it are packed into ints (bit i = coefficient of a^(2^i)).
The structure table T = (t_{i,j}) is defined by a * a^(2^i) = sum_j t_{i,j} a^(2^j);
row i of T is stored as an int with bit j = t_{i,j}.
"""

from concurrent.futures import ProcessPoolExecutor

from . import field as gf
from .errors import DomainError, NotNormalError
from .linalg import mat_invert, mat_rank, mat_transpose, parity, row_apply

# Coordinates w.r.t. a normal basis: n-bit int, bit i = coefficient of a^(2^i).
NormalCoords = int


def rotl(x: int, s: int, n: int) -> int:
    """Cyclic left rotation in index space: bit r of result = bit (r-s) mod n of x."""
    s %= n
    if s == 0:
        return x
    mask = (1 << n) - 1
    return ((x << s) | (x >> (n - s))) & mask


def conjugates(ctx: gf.FieldCtx, a: int):
    """[a, a^2, a^4, ...] -- the Frobenius orbit, length n."""
    out = []
    cur = gf.validate(ctx, a)
    for _ in range(ctx.n):
        out.append(cur)
        cur = gf.poly_mul_mod(ctx, cur, cur)
    return out

def is_normal_element(ctx: gf.FieldCtx, a: int) -> bool:
    """True iff the Frobenius orbit of a spans F_{2^n} over F_2."""
    if a == 0:
        return False
    return mat_rank(conjugates(ctx, a), ctx.n) == ctx.n


class NormalBasisCtx:
    """A normal basis of F_{2^n} together with its structure table."""

    def __init__(self, ctx: gf.FieldCtx, alpha: int):
        if not is_normal_element(ctx, alpha):
            raise NotNormalError(
                f"{gf.elem_to_hex(ctx, alpha)} does not generate a normal basis (n={ctx.n})")
        self.field = ctx
        self.alpha = alpha
        self.n = ctx.n
        self.conj = conjugates(ctx, alpha)
        self._from_normal = self.conj  # row i = poly coords of a^(2^i)
        self._to_normal = mat_invert(self.conj, ctx.n)
        table = []
        for i in range(ctx.n):
            prod = gf.poly_mul_mod(ctx, alpha, self.conj[i])
            table.append(row_apply(self._to_normal, prod))
        self.table = table
        self.weight = sum(bin(r).count("1") for r in table)
        self.density = ctx.n * self.weight
        self._mul_rows = None

    def to_poly(self, v: NormalCoords) -> int:
        """Normal coordinates -> polynomial-basis element."""
        self._check(v)
        return row_apply(self._from_normal, v)

    def to_normal(self, p: int) -> NormalCoords:
        """Polynomial-basis element -> normal coordinates."""
        gf.validate(self.field, p)
        return row_apply(self._to_normal, p)

    def _check(self, v: int) -> int:
        if not isinstance(v, int) or v < 0 or v > self.field.mask:
            raise DomainError(f"coordinate vector {v!r} out of range for n={self.n}")
        return v

    def one(self) -> NormalCoords:
        """Coordinates of the field identity (all-ones for a normal basis)."""
        return self.to_normal(1)

    def alpha_coords(self) -> NormalCoords:
        """Coordinates of the basis generator itself (unit bit 0)."""
        return 1

    @property
    def mul_rows(self):
        """Product tables T_k (k = 0..n-1), rows over i: bit j = t_{(j-i) mod n, (k-i) mod n}."""
        if self._mul_rows is None:
            n = self.n
            tabs = []
            for k in range(n):
                rows = []
                for i in range(n):
                    r = 0
                    ki = (k - i) % n
                    for j in range(n):
                        if (self.table[(j - i) % n] >> ki) & 1:
                            r |= 1 << j
                    rows.append(r)
                tabs.append(rows)
            self._mul_rows = tabs
        return self._mul_rows

    def __repr__(self):
        return (f"NormalBasisCtx(n={self.n}, alpha={gf.elem_to_hex(self.field, self.alpha)}, "
                f"weight={self.weight})")


def build_normal_basis(ctx: gf.FieldCtx, alpha: int) -> NormalBasisCtx:
    """Construct the normal-basis context for a normal element alpha."""
    return NormalBasisCtx(ctx, alpha)


def frobenius_shift(n: int, v: NormalCoords, k: int = 1) -> NormalCoords:
    """Squaring in normal coordinates: cyclic shift of v by k positions."""
    return rotl(v, k, n)


def alpha_mul(nb: NormalBasisCtx, v: NormalCoords) -> NormalCoords:
    """Multiply v by the basis generator: the table-vector product over T."""
    nb._check(v)
    return row_apply(nb.table, v)


def normal_mul(nb: NormalBasisCtx, u: NormalCoords, v: NormalCoords) -> NormalCoords:
    """Full product in normal coordinates via the tables z_k = u T_k v^t."""
    nb._check(u)
    nb._check(v)
    z = 0
    for k, rows in enumerate(nb.mul_rows):
        if parity(row_apply(rows, u) & v):
            z |= 1 << k
    return z


def per_ell_cross_sum(table, n: int, ell: int) -> int:
    """S_ell: number of (i,j) with sum_r t_{j-i,r-i} t_{r,ell} nonzero in F_2."""
    col = mat_transpose(table, n)[ell]
    total = 0
    for d in range(n):
        row = table[d]
        for i in range(n):
            total += parity(rotl(row, i, n) & col)
    return total


def cross_product_sum(nb_or_table, n: int = None) -> int:
    """Sum of S_ell over ell = 0..n-1 for a normal basis (or raw table)."""
    if isinstance(nb_or_table, NormalBasisCtx):
        table, n = nb_or_table.table, nb_or_table.n
    else:
        table = nb_or_table
        if n is None:
            raise DomainError("n required with a raw table")
    cols = mat_transpose(table, n)
    rots = [[rotl(table[d], i, n) for i in range(n)] for d in range(n)]
    total = 0
    for ell in range(n):
        col = cols[ell]
        for d in range(n):
            rd = rots[d]
            for i in range(n):
                total += parity(rd[i] & col)
    return total


def _search_chunk(modulus: int, require_primitive: bool, start: int, stop: int):
    ctx = gf.FieldCtx(modulus, check_irreducible=False)
    found = []
    for a in range(start, stop):
        if is_normal_element(ctx, a):
            if require_primitive and not gf.is_primitive(ctx, a):
                continue
            found.append(a)
    return found


def search_normal_elements(ctx: gf.FieldCtx, require_primitive: bool = False,
                           limit: int = None, workers: int = 1):
    """Normal elements of F_{2^n} in ascending candidate order (optionally primitive).

    Scans candidates 1..2^n-1; stops after `limit` hits (scans all when None).
    With workers > 1 the range is partitioned and results merged in candidate order.
    """
    top = 1 << ctx.n
    if workers and workers > 1 and top > 4096:
        chunk = (top + workers - 1) // workers
        spans = [(s, min(s + chunk, top)) for s in range(1, top, chunk)]
        out = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_chunk, ctx.modulus, require_primitive, s, e)
                       for s, e in spans]
            for fut in futures:  # submission order == candidate order
                out.extend(fut.result())
                if limit is not None and len(out) >= limit:
                    break
        return out[:limit] if limit is not None else out
    out = []
    for a in range(1, top):
        if is_normal_element(ctx, a):
            if require_primitive and not gf.is_primitive(ctx, a):
                continue
            out.append(a)
            if limit is not None and len(out) >= limit:
                break
    return out
