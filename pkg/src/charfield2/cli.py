"""Command-line front end: searches, tables, densities, verification, benchmarks.

Subcommands
  cross-sums  table cross-product sums of the pinned normal bases
  densities   normal/quadratic/Kummer extended-basis density records
  tables      multiplication tables (base or extended, computed vs closed form)
  verify      oracle-equivalence, count, and tower-predicate suites
  bench       per-operation cost accounting for the extended-basis programs
  search      enumerate normal elements of a field

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 missing fixture.
All CSV/JSON output is byte-identical across runs for the same arguments
(wall-clock timing is only written to stderr, or to the output with --timing).
"""

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import bitpoly, extbasis, field as gf, fixtures, normal, tables, tower
from .errors import (CharField2Error, ConstructionContradictionError,
                     MissingFixtureError, NoKummerExtensionError,
                     NotNormalError, UnsupportedDegreeError)

_KIND_CHOICES = extbasis.KINDS


@dataclass
class RunConfig:
    """Plumbing for one CLI invocation (everything that affects output)."""
    command: str
    n: Optional[object] = None
    m: Optional[object] = None
    modulus: Optional[str] = None
    alpha: Optional[str] = None
    kind: Optional[object] = None
    format: str = "csv"
    out: Optional[str] = None
    seed: int = 0
    workers: int = 1
    limit: Optional[int] = None

    @classmethod
    def from_args(cls, args):
        keys = ("command", "n", "m", "modulus", "alpha", "kind", "format",
                "out", "seed", "workers", "limit")
        return cls(**{k: getattr(args, k) for k in keys if hasattr(args, k)})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charfield2",
        description="Normal bases of F_2^n and their quadratic, cubic Kummer, "
                    "quartic, and sextic extended bases: tables, densities, "
                    "counted arithmetic, and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="csv"):
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default,
                       help="output format (default %(default)s)")
        p.add_argument("--out", default=None, help="write output to this path")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized checks (default %(default)s)")

    p = sub.add_parser("cross-sums",
                       help="table cross-product sums of pinned normal bases")
    p.add_argument("--n", type=int, nargs="+", default=None,
                   help="degrees to report (default: all pinned degrees)")
    p.add_argument("--modulus", default=None,
                   help="explicit modulus ('auto' = least irreducible); "
                        "needs a single --n")
    p.add_argument("--alpha", default=None,
                   help="explicit normal element ('search' = first found)")
    common(p)

    p = sub.add_parser("densities",
                       help="density records for degrees that are multiples of 6")
    p.add_argument("--m", type=int, nargs="+", default=None,
                   help="degrees to report (default: 6, 12, ..., 78)")
    common(p)

    p = sub.add_parser("tables",
                       help="multiplication table of a base or extended basis")
    p.add_argument("--n", type=int, required=True, help="base degree")
    p.add_argument("--kind", choices=_KIND_CHOICES, default=None,
                   help="extended-basis kind (omit for the base table)")
    p.add_argument("--modulus", default=None,
                   help="explicit modulus ('auto' = least irreducible)")
    p.add_argument("--alpha", default=None,
                   help="explicit normal element ('search' = first found)")
    common(p)

    p = sub.add_parser("verify",
                       help="run equivalence/count/tower suites, report failures")
    p.add_argument("--n", type=int, default=8,
                   help="largest base degree exercised (default %(default)s)")
    p.add_argument("--kind", choices=_KIND_CHOICES, nargs="+",
                   default=list(_KIND_CHOICES),
                   help="kinds to exercise (default: all)")
    p.add_argument("--limit", type=int, default=50,
                   help="random pairs per equivalence check (default %(default)s)")
    p.add_argument("--corrupt-table", action="store_true",
                   help=argparse.SUPPRESS)
    common(p, fmt_default="json")

    p = sub.add_parser("bench",
                       help="per-operation cost accounting for one kind")
    p.add_argument("--kind", choices=_KIND_CHOICES, required=True)
    p.add_argument("--n", type=int, required=True, help="base degree")
    p.add_argument("--modulus", default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--limit", type=int, default=100,
                   help="iterations (default %(default)s)")
    p.add_argument("--timing", action="store_true",
                   help="include mean wall time in the output "
                        "(off by default to keep output reproducible)")
    common(p)

    p = sub.add_parser("search", help="enumerate normal elements of a field")
    p.add_argument("--n", type=int, required=True, help="degree")
    p.add_argument("--modulus", default=None,
                   help="modulus (default: least irreducible of the degree)")
    p.add_argument("--require-primitive", action="store_true",
                   help="only elements generating the multiplicative group")
    p.add_argument("--limit", type=int, default=10,
                   help="stop after this many hits (default %(default)s)")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel scan processes (default %(default)s)")
    common(p)

    return parser


# --- output plumbing ----------------------------------------------------

def _emit(args, header, rows, json_obj) -> None:
    if args.format == "json":
        text = json.dumps(json_obj, indent=2, sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_basis(n, modulus, alpha, require_primitive=False):
    """Build a normal basis from explicit arguments, falling back to the
    pinned fixture; returns (basis, fixture-or-None)."""
    if modulus is None and alpha is None:
        fixture = fixtures.get_fixture(n)
        return fixture.basis(), fixture
    if modulus is None or alpha is None:
        raise UnsupportedDegreeError(
            "--modulus and --alpha must be given together")
    if modulus == "auto":
        mod = bitpoly.min_irreducible(n)
    else:
        mod = bitpoly.parse(modulus)
    ctx = gf.FieldCtx(mod)
    if ctx.n != n:
        raise UnsupportedDegreeError(
            f"modulus degree {ctx.n} does not match --n {n}")
    if alpha == "search":
        hits = normal.search_normal_elements(
            ctx, require_primitive=require_primitive, limit=1)
        if not hits:
            raise NotNormalError(f"no normal element found for n={n}")
        a = hits[0]
    else:
        a = bitpoly.parse(alpha)
    return normal.build_normal_basis(ctx, a), None


def _basis_for_kind(kind, n, tries=60):
    """A normal basis over which `kind` exists at degree n: the pinned
    fixture when suitable, else the first suitable searched element.
    Returns None when no candidate admits the kind."""
    if kind == "asw4" and n % 2 != 0:
        return None
    if kind == "k3" and ((1 << n) - 1) % 3 != 0:
        return None
    if n in fixtures.FIXTURES:
        fixture = fixtures.get_fixture(n)
        ctx = gf.FieldCtx(bitpoly.parse(fixture.modulus))
        cands = [bitpoly.parse(fixture.alpha)]
    else:
        ctx = gf.FieldCtx(bitpoly.min_irreducible(n))
        cands = []
    want_primitive = kind == "k3"
    cands += [a for a in normal.search_normal_elements(
        ctx, require_primitive=want_primitive, limit=tries) if a not in cands]
    for a in cands:
        nb = normal.build_normal_basis(ctx, a)
        try:
            extbasis.build_kind(nb, kind)
        except (UnsupportedDegreeError, NoKummerExtensionError):
            continue
        return nb
    return None


# --- subcommands ----------------------------------------------------------

def cmd_cross_sums(args) -> int:
    if args.modulus is not None or args.alpha is not None:
        if args.n is None or len(args.n) != 1:
            raise UnsupportedDegreeError(
                "an explicit --modulus/--alpha needs exactly one --n")
        nb, fixture = _resolve_basis(args.n[0], args.modulus, args.alpha)
        entries = [(args.n[0], nb, None)]
    else:
        degrees = args.n if args.n is not None else fixtures.fixture_degrees()
        entries = []
        for n in degrees:
            fixture = fixtures.get_fixture(n)
            entries.append((n, fixture.basis(), fixture))

    header = ("n", "modulus", "normal_element", "cross_sum", "expected", "match")
    rows, failures = [], 0
    for n, nb, fixture in entries:
        cs = normal.cross_product_sum(nb)
        expected = fixture.cross_sum if fixture else ""
        match = "" if fixture is None else ("yes" if cs == expected else "no")
        failures += match == "no"
        rows.append((n, bitpoly.to_human(nb.field.modulus),
                     bitpoly.to_human(nb.alpha), cs, expected, match))
    _emit(args, header, rows,
          [dict(zip(header, r)) for r in rows])
    return 1 if failures else 0


def cmd_densities(args) -> int:
    degrees = args.m if args.m is not None else list(fixtures.DENSITY_DEGREES)
    header = ("m", "d_n", "d_n_expected", "d_a", "d_a_expected",
              "d_k", "d_k_expected")
    rows, failures = [], 0

    def check(computed, expected):
        nonlocal failures
        if computed != "" and expected != "" and computed != expected:
            failures += 1

    for m in degrees:
        d_n = ""
        if m in fixtures.FIXTURES:
            d_n = fixtures.get_fixture(m).basis().density
        d_n_exp = fixtures.EXPECTED_NORMAL_DENSITY.get(m, "")
        check(d_n, d_n_exp)

        d_a = ""
        if m % 2 == 0 and m // 2 in fixtures.FIXTURES:
            f = fixtures.get_fixture(m // 2)
            d_a = 4 * f.table_weight * f.n + f.cross_sum
        d_a_exp = fixtures.EXPECTED_QUAD_DENSITY.get(m, "")
        check(d_a, d_a_exp)

        d_k = ""
        if m % 3 == 0 and m // 3 in fixtures.FIXTURES:
            f = fixtures.get_fixture(m // 3)
            try:
                extbasis.build_kummer3(f.basis())
            except (UnsupportedDegreeError, NoKummerExtensionError):
                d_k = "-"
            else:
                d_k = 6 * f.table_weight * f.n + 3 * f.cross_sum
        d_k_exp = ("-" if m in fixtures.KUMMER_NONE
                   else fixtures.EXPECTED_KUMMER_DENSITY.get(m, ""))
        check(d_k, d_k_exp)

        rows.append((m, d_n, d_n_exp, d_a, d_a_exp, d_k, d_k_exp))
    _emit(args, header, rows, [dict(zip(header, r)) for r in rows])
    return 1 if failures else 0


def cmd_tables(args) -> int:
    nb, _ = _resolve_basis(args.n, args.modulus, args.alpha,
                           require_primitive=args.kind == "k3")
    if args.kind is None:
        width = (nb.n + 7) // 8
        header = ("i", "row", "popcount")
        rows = [(i, r.to_bytes(width, "little").hex(), bin(r).count("1"))
                for i, r in enumerate(nb.table)]
        _emit(args, header, rows,
              {"n": nb.n, "weight": nb.weight, "density": nb.density,
               "rows": [r for _, r, _ in rows]})
        return 0

    ctx = extbasis.build_kind(nb, args.kind)
    ts = tables.build_tables(tables.build_embedding(ctx))
    expected = (tables.expected_counts(nb, args.kind)
                if args.kind != "ka6" else None)
    header = ("table_index", "nonzeros", "closed_form", "match")
    rows, failures = [], 0
    for k, nz in enumerate(ts.per_table_nonzeros):
        exp = expected[k] if expected is not None else ""
        match = "" if expected is None else ("yes" if nz == exp else "no")
        failures += match == "no"
        rows.append((k, nz, exp, match))
    _emit(args, header, rows,
          {"kind": args.kind, "n": nb.n, "m": ts.m,
           "per_table_nonzeros": list(ts.per_table_nonzeros),
           "closed_form": None if expected is None else list(expected),
           "density": ts.density})
    return 1 if failures else 0


def _verify_checks(args):
    """Yield (name, kind, n, ok, detail) rows for the verification suites."""
    pairs = args.limit
    for kind in args.kind:
        for n in range(1, args.n + 1):
            nb = _basis_for_kind(kind, n)
            if nb is None:
                continue
            ctx = extbasis.build_kind(nb, kind)
            emb = tables.build_embedding(ctx)

            rng = random.Random(f"{args.seed}:{kind}:{n}")
            bad = 0
            for _ in range(pairs):
                x = extbasis.ExtElem(tuple(rng.randrange(1 << n)
                                           for _ in range(ctx.d)))
                y = extbasis.ExtElem(tuple(rng.randrange(1 << n)
                                           for _ in range(ctx.d)))
                z = extbasis.mul(ctx, x, y)
                if emb.embed_ext(z) != gf.poly_mul_mod(
                        emb.big, emb.embed_ext(x), emb.embed_ext(y)):
                    bad += 1
                s = extbasis.square(ctx, x)
                if emb.embed_ext(s) != gf.square(emb.big, emb.embed_ext(x)):
                    bad += 1
            yield ("oracle_equivalence", kind, n, bad == 0,
                   f"{pairs} pairs, {bad} mismatches")

            ctx.counter.reset()
            extbasis.mul(ctx, extbasis.zero(ctx), extbasis.zero(ctx))
            got = ctx.counter.as_tuple()
            want = extbasis.EXPECTED_MUL_COUNTS[kind]
            yield ("mul_op_counts", kind, n, got == want,
                   f"got {got}, want {want}")
            ctx.counter.reset()
            extbasis.square(ctx, extbasis.zero(ctx))
            got = ctx.counter.as_tuple()
            want = extbasis.EXPECTED_SQUARE_COUNTS[kind]
            yield ("square_op_counts", kind, n, got == want,
                   f"got {got}, want {want}")

            if kind != "ka6" and (kind != "asw4" or n <= 4):
                report = tables.verify_table_counts(ctx)
                yield ("closed_form_counts", kind, n, report.ok,
                       f"expected {list(report.expected)}, "
                       f"actual {list(report.actual)}")

            if args.corrupt_table:
                ts = tables.build_tables(emb)
                ts.tables[0][0] ^= 1  # flip entry (k=0, i=0, j=0)
                witnesses = tables.verify_table_entries(emb, ts)
                yield ("corruption_control", kind, n, not witnesses,
                       f"first bad entries {witnesses[:3]}")

    for n in range(1, min(args.n, 6) + 1):
        nb = _basis_for_kind("as2", n)
        as2 = extbasis.build_as2(nb)
        emb = tables.build_embedding(as2)
        b_img = emb.gen_images["b"]
        ok = tower.biquadratic_possible(n) == (gf.trace(emb.big, b_img) == 1)
        yield ("tower_biquadratic", "as2", n, ok,
               "predicate vs trace of the quadratic generator's image")
        built = True
        try:
            extbasis.build_ka6(nb)
        except NoKummerExtensionError:
            built = False
        ok = tower.kummer_over_as2_possible(as2) == built
        yield ("tower_kummer_over_quadratic", "as2", n, ok,
               "predicate vs sextic builder outcome")
        k3nb = _basis_for_kind("k3", n)
        if k3nb is not None:
            k3 = extbasis.build_kummer3(k3nb)
            beta = extbasis.generator_element(k3, "b")
            gamma = tower.artin_schreier_preimage(k3, beta)
            sq = extbasis.square(k3, gamma)
            recovered = extbasis.ExtElem(
                tuple(u ^ v for u, v in zip(sq.blocks, gamma.blocks)))
            ok = (tower.as2_over_k3_possible(k3) is False
                  and recovered == beta
                  and tower.ext_trace(k3, beta) == extbasis.zero(k3))
            yield ("tower_no_quadratic_over_cubic", "k3", n, ok,
                   "trace 0 and a solved quadratic preimage")
            embk = tables.build_embedding(k3)
            direct = not gf.is_cube(embk.big, embk.gen_images["b"])
            ok = tower.bicubic_possible(n, k3nb) == direct
            yield ("tower_bicubic", "k3", n, ok,
                   "valuation criterion vs direct cube test in the big field")


def cmd_verify(args) -> int:
    checks = [
        {"name": name, "kind": kind, "n": n, "ok": ok, "detail": detail}
        for name, kind, n, ok, detail in _verify_checks(args)
    ]
    failures = sum(not c["ok"] for c in checks)
    report = {"max_n": args.n, "seed": args.seed, "pairs": args.limit,
              "kinds": list(args.kind), "failures": failures,
              "checks": checks}
    header = ("name", "kind", "n", "ok", "detail")
    rows = [(c["name"], c["kind"], c["n"], "yes" if c["ok"] else "no",
             c["detail"]) for c in checks]
    _emit(args, header, rows, report)
    return 1 if failures else 0


def cmd_bench(args) -> int:
    nb, _ = _resolve_basis(args.n, args.modulus, args.alpha,
                           require_primitive=args.kind == "k3")
    ctx = extbasis.build_kind(nb, args.kind)
    rng = random.Random(args.seed)
    iters = args.limit
    xs = [extbasis.ExtElem(tuple(rng.randrange(1 << args.n)
                                 for _ in range(ctx.d))) for _ in range(iters)]
    ys = [extbasis.ExtElem(tuple(rng.randrange(1 << args.n)
                                 for _ in range(ctx.d))) for _ in range(iters)]

    results, failures = [], 0
    for op, want in (("mul", extbasis.EXPECTED_MUL_COUNTS[args.kind]),
                     ("square", extbasis.EXPECTED_SQUARE_COUNTS[args.kind])):
        ctx.counter.reset()
        t0 = time.perf_counter()
        if op == "mul":
            for x, y in zip(xs, ys):
                extbasis.mul(ctx, x, y)
        else:
            for x in xs:
                extbasis.square(ctx, x)
        elapsed = time.perf_counter() - t0
        total = ctx.counter.as_tuple()
        got = tuple(t // iters for t in total)
        exact = all(t % iters == 0 for t in total) and got == want
        failures += not exact
        mean_ns = round(elapsed / iters * 1e9)
        print(f"bench {args.kind} n={args.n} {op}: "
              f"mean {mean_ns} ns over {iters} iterations", file=sys.stderr)
        results.append((op, got, want, exact, mean_ns))

    header = ["kind", "n", "iterations", "op", "base_mults", "base_adds",
              "table_vector_products", "expected_mults", "expected_adds",
              "expected_tvp", "match"]
    if args.timing:
        header.append("mean_ns")
    rows = []
    for op, got, want, exact, mean_ns in results:
        row = [args.kind, args.n, iters, op, *got, *want,
               "yes" if exact else "no"]
        if args.timing:
            row.append(mean_ns)
        rows.append(tuple(row))
    _emit(args, tuple(header), rows,
          [dict(zip(header, r)) for r in rows])
    return 1 if failures else 0


def cmd_search(args) -> int:
    mod = (bitpoly.min_irreducible(args.n) if args.modulus in (None, "auto")
           else bitpoly.parse(args.modulus))
    ctx = gf.FieldCtx(mod)
    if ctx.n != args.n:
        raise UnsupportedDegreeError(
            f"modulus degree {ctx.n} does not match --n {args.n}")
    hits = normal.search_normal_elements(
        ctx, require_primitive=args.require_primitive,
        limit=args.limit, workers=args.workers)
    header = ("element", "element_hex", "table_weight", "density", "cross_sum")
    rows = []
    for a in hits:
        nb = normal.build_normal_basis(ctx, a)
        rows.append((bitpoly.to_human(a), gf.elem_to_hex(ctx, a),
                     nb.weight, nb.density, normal.cross_product_sum(nb)))
    _emit(args, header, rows,
          {"n": args.n, "modulus": bitpoly.to_human(mod),
           "hits": [dict(zip(header, r)) for r in rows]})
    return 0


_COMMANDS = {
    "cross-sums": cmd_cross_sums,
    "densities": cmd_densities,
    "tables": cmd_tables,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "search": cmd_search,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MissingFixtureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConstructionContradictionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CharField2Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
