"""Multiplication tables of extended bases, oracle embeddings, and count checks.

The ground truth for every table is an independent embedding into one big field
F_2[x]/(g) of degree m: basis vectors are mapped to explicit elements there, all
m^2 pairwise products are expanded back over the basis, and the resulting tables
are compared against the closed-form per-table counts.
"""

from dataclasses import dataclass

from . import bitpoly
from . import field as gf
from .errors import ConstructionContradictionError, DomainError
from .extbasis import ExtBasisCtx, ExtElem
from .linalg import mat_invert, mat_transpose, parity, row_apply
from .normal import NormalBasisCtx, cross_product_sum, rotl


# --- polynomial helpers with coefficients in a big field ----------------

def _fp_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _fp_monic(big, p):
    p = _fp_trim(list(p))
    if not p:
        return p
    lead = p[-1]
    if lead == 1:
        return p
    inv = gf.inverse(big, lead)
    return [gf.poly_mul_mod(big, c, inv) for c in p]


def _fp_mod(big, a, b):
    a = list(a)
    b = _fp_trim(list(b))
    db = len(b) - 1
    binv = 1 if b[-1] == 1 else gf.inverse(big, b[-1])
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - db
        factor = gf.poly_mul_mod(big, a[-1], binv)
        for i, c in enumerate(b):
            if c:
                a[shift + i] ^= gf.poly_mul_mod(big, factor, c)
        _fp_trim(a)
    return a


def _fp_mulmod(big, a, b, mod):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, u in enumerate(a):
        if not u:
            continue
        for j, v in enumerate(b):
            if v:
                out[i + j] ^= gf.poly_mul_mod(big, u, v)
    return _fp_mod(big, out, mod)


def _fp_gcd(big, a, b):
    a, b = list(a), list(b)
    while _fp_trim(b):
        a, b = b, _fp_mod(big, a, b)
    return _fp_monic(big, a)


def find_roots(big: gf.FieldCtx, coeffs) -> list:
    """All roots in `big` of a squarefree polynomial that splits there (sorted)."""
    h = _fp_monic(big, coeffs)
    stack = [h]
    roots = []
    while stack:
        h = stack.pop()
        if len(h) == 2:  # monic X + c: root is c (char 2)
            roots.append(h[0])
            continue
        if len(h) < 2:
            continue
        split = None
        j = -1
        while split is None:
            j += 1
            if j >= big.n:
                raise ConstructionContradictionError("root splitting did not converge")
            c = 1 << j  # x^j: the basis elements jointly separate any two roots
            # T_c(X) = sum_{i<m} (cX)^(2^i) mod h
            t = _fp_mod(big, [0, c], h)
            acc = list(t) + [0] * (len(h) - 1 - len(t))
            for _ in range(big.n - 1):
                t = _fp_mulmod(big, t, t, h)
                for i, v in enumerate(t):
                    acc[i] ^= v
            g = _fp_gcd(big, h, _fp_trim(acc))
            if 1 < len(g) < len(h):
                split = g
        stack.append(split)
        stack.append(_fp_monic(big, _fp_divide(big, h, split)))
    return sorted(roots)


def _fp_divide(big, a, b):
    a = list(a)
    b = _fp_trim(list(b))
    db = len(b) - 1
    binv = 1 if b[-1] == 1 else gf.inverse(big, b[-1])
    q = [0] * max(len(a) - db, 0)
    while _fp_trim(a) and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        factor = gf.poly_mul_mod(big, a[-1], binv)
        q[shift] = factor
        for i, c in enumerate(b):
            if c:
                a[shift + i] ^= gf.poly_mul_mod(big, factor, c)
    return q


# --- oracle embedding ---------------------------------------------------

def _pack(blocks, n):
    out = 0
    for b, v in enumerate(blocks):
        out |= v << (b * n)
    return out


def _unpack(flat, n, d):
    mask = (1 << n) - 1
    return tuple((flat >> (b * n)) & mask for b in range(d))


class OracleEmbedding:
    """Deterministic embedding of a (possibly extended) basis into one big field."""

    def __init__(self, source):
        if isinstance(source, ExtBasisCtx):
            self.ext = source
            nb = source.base
            d = source.d
        elif isinstance(source, NormalBasisCtx):
            self.ext = None
            nb = source
            d = 1
        else:
            raise DomainError("source must be a normal or extended basis context")
        self.base = nb
        self.d = d
        self.m = nb.n * d
        self.big = gf.FieldCtx(bitpoly.min_irreducible(self.m), check_irreducible=False)
        big = self.big

        # image of the base field: least root of its modulus in the big field
        froots = find_roots(big, [1 if (nb.field.modulus >> i) & 1 else 0
                                  for i in range(nb.n + 1)])
        self.root = froots[0]
        alpha_img = self._eval_base(nb.alpha)
        self.alpha_img = alpha_img
        conj = []
        cur = alpha_img
        for _ in range(nb.n):
            conj.append(cur)
            cur = gf.poly_mul_mod(big, cur, cur)
        self.alpha_conj = conj

        self.gen_images = self._solve_generators()
        mono_imgs = self._monomial_images()
        images = []
        for mono in mono_imgs:
            for i in range(nb.n):
                images.append(gf.poly_mul_mod(big, conj[i], mono))
        self.basis_images = images
        inv = mat_invert(images, self.m)
        if inv is None:
            raise ConstructionContradictionError("basis images are linearly dependent")
        self._to_coords = inv

    def _eval_base(self, elem: int) -> int:
        """Image of a base-field element (poly coords) under x -> root."""
        big = self.big
        out = 0
        power = 1
        for i in range(self.base.n):
            if (elem >> i) & 1:
                out ^= power
            power = gf.poly_mul_mod(big, power, self.root)
        return out

    def _solve_generators(self):
        big = self.big
        a = self.alpha_img
        if self.ext is None:
            return {}
        kind = self.ext.kind
        if kind == "as2":
            return {"b": self._as_root(a)}
        if kind == "k3":
            return {"b": find_roots(big, [a, 0, 0, 1])[0]}
        if kind == "asw4":
            b0 = self._as_root(a)
            a2 = gf.poly_mul_mod(big, a, a)
            c = gf.poly_mul_mod(big, a ^ 1, b0) ^ a2  # (1+a)b0 + a^2
            b1 = self._as_root(c)
            return {"b0": b0, "b1": b1}
        if kind == "ka6":
            b = self._as_root(a)
            g = find_roots(big, [b, 0, 0, 1])[0]
            return {"b": b, "g": g}
        raise DomainError(f"unknown kind {kind!r}")

    def _as_root(self, c: int) -> int:
        sols = gf.solve_artin_schreier(self.big, c)
        if not sols:
            raise ConstructionContradictionError(
                "defining quadratic has no root in the big field")
        return sols[0]

    def _monomial_images(self):
        big = self.big
        if self.ext is None:
            return [1]
        out = []
        for mono in self.ext.monomials:
            img = 1
            for gen, e in zip(self.ext.gens, mono):
                for _ in range(e):
                    img = gf.poly_mul_mod(big, img, self.gen_images[gen])
            out.append(img)
        return out

    # conversions ------------------------------------------------------
    def embed_blocks(self, blocks) -> int:
        """Blocks of normal coordinates -> big-field element."""
        return row_apply(self.basis_images, _pack(blocks, self.base.n))

    def embed_ext(self, x: ExtElem) -> int:
        return self.embed_blocks(x.blocks)

    def embed_base_elem(self, v: int) -> int:
        """Base-field normal coordinates -> big-field element."""
        return row_apply(self.basis_images[:self.base.n], v)

    def to_blocks(self, y: int):
        """Big-field element -> blocks of coordinates over the basis."""
        flat = row_apply(self._to_coords, y)
        return _unpack(flat, self.base.n, self.d)

    def check_rules(self) -> bool:
        """Plug each construction rule back in via big-field arithmetic."""
        big = self.big
        a = self.alpha_img
        g = self.gen_images
        sq = lambda t: gf.poly_mul_mod(big, t, t)
        mul = lambda u, v: gf.poly_mul_mod(big, u, v)
        if self.ext is None:
            return True
        kind = self.ext.kind
        if kind == "as2":
            return sq(g["b"]) == g["b"] ^ a
        if kind == "k3":
            return mul(sq(g["b"]), g["b"]) == a
        if kind == "asw4":
            ok0 = sq(g["b0"]) == g["b0"] ^ a
            rhs = g["b1"] ^ mul(a ^ 1, g["b0"]) ^ sq(a)
            return ok0 and sq(g["b1"]) == rhs
        if kind == "ka6":
            ok0 = sq(g["b"]) == g["b"] ^ a
            return ok0 and mul(sq(g["g"]), g["g"]) == g["b"]
        return False


def build_embedding(source) -> OracleEmbedding:
    """Construct the deterministic oracle embedding for a basis context."""
    emb = OracleEmbedding(source)
    if not emb.check_rules():
        raise ConstructionContradictionError("generator images violate their rules")
    return emb


# --- multiplication tables ----------------------------------------------

@dataclass
class TableSet:
    """All m multiplication tables of an m-element basis (rows as bit ints)."""
    m: int
    tables: list          # tables[k][i] = row int over j
    per_table_nonzeros: list
    density: int

    def entry(self, k: int, i: int, j: int) -> int:
        return (self.tables[k][i] >> j) & 1


def build_tables(emb: OracleEmbedding) -> TableSet:
    """Brute-force tables: expand every basis product over the basis."""
    m = emb.m
    big = emb.big
    imgs = emb.basis_images
    inv = emb._to_coords
    tables = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            coords = row_apply(inv, gf.poly_mul_mod(big, imgs[i], imgs[j]))
            while coords:
                low = coords & -coords
                tables[low.bit_length() - 1][i] |= 1 << j
                coords ^= low
    nz = [sum(bin(r).count("1") for r in t) for t in tables]
    return TableSet(m, tables, nz, sum(nz))


def table_mul(ts: TableSet, x: int, y: int) -> int:
    """Product of coordinate vectors via z_k = x T_k y^t."""
    z = 0
    for k, rows in enumerate(ts.tables):
        if parity(row_apply(rows, x) & y):
            z |= 1 << k
    return z


def normal_table_set(nb: NormalBasisCtx) -> TableSet:
    """The n tables of the base normal basis itself (t^k_{i,j} = t_{j-i,k-i})."""
    rows = nb.mul_rows
    nz = [sum(bin(r).count("1") for r in t) for t in rows]
    return TableSet(nb.n, [list(t) for t in rows], nz, sum(nz))


# --- closed-form per-table counts ----------------------------------------

class _CountHelper:
    """Precomputed parity machinery over a base table for the count formulas."""

    def __init__(self, nb: NormalBasisCtx):
        self.nb = nb
        self.n = nb.n
        n = self.n
        T = nb.table
        self.rots = [[rotl(T[d], i, n) for i in range(n)] for d in range(n)]
        col1 = mat_transpose(T, n)
        col2 = []
        col3 = []
        for ell in range(n):
            c2 = 0
            for r in range(n):
                if parity(T[r] & col1[ell]):
                    c2 |= 1 << r
            col2.append(c2)
        for ell in range(n):
            c3 = 0
            for r in range(n):
                if parity(T[r] & col2[ell]):
                    c3 |= 1 << r
            col3.append(c3)
        self.col1, self.col2, self.col3 = col1, col2, col3
        self.T = T

    def sums(self, ell: int, combos):
        """For each combo (a callable of in1,in2,in3,e -> 0/1), the (i,j) tally."""
        n = self.n
        c1, c2, c3 = self.col1[ell], self.col2[ell], self.col3[ell]
        totals = [0] * len(combos)
        for d in range(n):
            row = self.T[d]
            rotsd = self.rots[d]
            for i in range(n):
                u = rotsd[i]
                in1 = parity(u & c1)
                in2 = parity(u & c2)
                in3 = parity(u & c3)
                e = (row >> ((ell - i) % n)) & 1
                for c, fn in enumerate(combos):
                    totals[c] += fn(in1, in2, in3, e)
        return totals


def as2_expected_counts(nb: NormalBasisCtx):
    """Per-table nonzero counts of the quadratic extended basis (2n tables)."""
    h = _CountHelper(nb)
    w = nb.weight
    counts = []
    for ell in range(nb.n):
        (s1,) = h.sums(ell, [lambda i1, i2, i3, e: i1])
        counts.append(w + s1)
    counts.extend([3 * w] * nb.n)
    return counts


def k3_expected_counts(nb: NormalBasisCtx):
    """Per-table nonzero counts of the cubic Kummer extended basis (3n tables)."""
    h = _CountHelper(nb)
    w = nb.weight
    s = []
    for ell in range(nb.n):
        (s1,) = h.sums(ell, [lambda i1, i2, i3, e: i1])
        s.append(s1)
    return ([w + 2 * s[ell] for ell in range(nb.n)]
            + [2 * w + s[ell] for ell in range(nb.n)]
            + [3 * w] * nb.n)


def asw4_expected_counts(nb: NormalBasisCtx):
    """Per-table nonzero counts of the quartic tower basis (4n tables)."""
    h = _CountHelper(nb)
    w = nb.weight
    n = nb.n
    r1 = []
    r2 = []
    r3 = []
    for ell in range(n):
        a, b, c, dd = h.sums(ell, [
            lambda i1, i2, i3, e: i1,
            lambda i1, i2, i3, e: i2,
            lambda i1, i2, i3, e: i2 ^ i1,
            lambda i1, i2, i3, e: i3 ^ i2 ^ i1,
        ])
        r1.append(w + a + b + 2 * c + dd)
        p, q = h.sums(ell, [
            lambda i1, i2, i3, e: i1 ^ e,
            lambda i1, i2, i3, e: i2 ^ i1 ^ e,
        ])
        r2.append(4 * w + p + 2 * q)
        r3.append(3 * w + 3 * a)
    return r1 + r2 + r3 + [9 * w] * n


def expected_counts(nb: NormalBasisCtx, kind: str):
    fns = {"as2": as2_expected_counts, "k3": k3_expected_counts,
           "asw4": asw4_expected_counts}
    if kind not in fns:
        raise DomainError(f"no closed-form counts for kind {kind!r}")
    return fns[kind](nb)


def expected_density(nb: NormalBasisCtx, kind: str) -> int:
    """Closed-form density: 4d(N)+CS for as2, 6d(N)+3CS for k3."""
    cs = cross_product_sum(nb)
    if kind == "as2":
        return 4 * nb.density + cs
    if kind == "k3":
        return 6 * nb.density + 3 * cs
    if kind == "asw4":
        return sum(asw4_expected_counts(nb))
    raise DomainError(f"no density formula for kind {kind!r}")


# --- verification -------------------------------------------------------

@dataclass
class CountReport:
    kind: str
    n: int
    m: int
    ok: bool
    expected: list
    actual: list
    mismatches: list          # [(table index, expected, actual)]
    density_expected: int
    density_actual: int


def _verify_counts(ext: ExtBasisCtx, expected) -> CountReport:
    emb = build_embedding(ext)
    ts = build_tables(emb)
    actual = ts.per_table_nonzeros
    mism = [(k, e, a) for k, (e, a) in enumerate(zip(expected, actual)) if e != a]
    return CountReport(ext.kind, ext.n, ext.m, not mism, list(expected), actual,
                       mism, sum(expected), ts.density)


def verify_as2_counts(ext: ExtBasisCtx) -> CountReport:
    """Closed-form vs brute-force per-table counts for a quadratic basis."""
    return _verify_counts(ext, as2_expected_counts(ext.base))


def verify_k3_counts(ext: ExtBasisCtx) -> CountReport:
    """Closed-form vs brute-force per-table counts for a cubic Kummer basis."""
    return _verify_counts(ext, k3_expected_counts(ext.base))


def verify_asw4_counts(ext: ExtBasisCtx) -> CountReport:
    """Closed-form vs brute-force per-table counts for a quartic tower basis."""
    return _verify_counts(ext, asw4_expected_counts(ext.base))


def verify_table_counts(ext: ExtBasisCtx) -> CountReport:
    """Closed-form vs brute-force per-table counts for any kind that has a
    closed form (all but the sextic tower)."""
    return _verify_counts(ext, expected_counts(ext.base, ext.kind))


def verify_table_entries(emb: OracleEmbedding, ts: TableSet):
    """Recompute every basis product; return (k, i, j) witnesses of bad entries."""
    big = emb.big
    imgs = emb.basis_images
    inv = emb._to_coords
    bad = []
    for i in range(emb.m):
        for j in range(emb.m):
            coords = row_apply(inv, gf.poly_mul_mod(big, imgs[i], imgs[j]))
            for k in range(emb.m):
                if ((coords >> k) & 1) != ts.entry(k, i, j):
                    bad.append((k, i, j))
    return bad
