"""Command-line front end.

Exit codes: 0 success, 1 a verification or oracle mismatch, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import counting, enumeration, gaussian, lattice, mat2, render, sail, verify

SCHEMA = 1


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _dump(obj: dict[str, Any]) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, sort_keys=False) + "\n"


def _tsv(rows: Sequence[Sequence[object]]) -> str:
    return "".join("\t".join(str(x) for x in row) + "\n" for row in rows)


# -- commands -----------------------------------------------------------------


def cmd_count(args: argparse.Namespace) -> tuple[str, int]:
    if args.coprime:
        formula, brute = counting.count_coprime_formula, counting.count_coprime_bruteforce
    else:
        formula, brute = counting.count_reduced_formula, counting.count_reduced_bruteforce
    value = formula(args.n)
    if not args.brute:
        return f"{value}\n", 0
    oracle = brute(args.n)
    return f"{value} {oracle}\n", 0 if value == oracle else 1


def cmd_seq(args: argparse.Namespace) -> tuple[str, int]:
    kind = "coprime" if args.coprime else "reduced"
    terms = counting.sequence(kind, args.n_max)
    if args.format == "bfile":
        return counting.format_bfile(terms), 0
    if args.format == "tsv":
        return _tsv(list(enumerate(terms, start=1))), 0
    return _dump({"kind": kind, "offset": 1, "terms": terms}), 0


def cmd_enumerate(args: argparse.Namespace) -> tuple[str, int]:
    sols = (enumeration.enumerate_coprime if args.coprime else enumeration.enumerate_solutions)(args.n)
    if args.orbits:
        orbs = enumeration.orbits(sols)
        total = sum(o.size for o in orbs)
        if args.format == "json":
            return _dump({
                "n": args.n,
                "orbits": [
                    {
                        "representative": list(o.representative.entries),
                        "size": o.size,
                        "members": [list(m.entries) for m in o.members],
                    }
                    for o in orbs
                ],
                "total": total,
            }), 0
        rows = [(*o.representative.entries, o.size) for o in orbs]
        return _tsv(rows) + f"total\t{total}\n", 0
    if args.format == "json":
        return _dump({"n": args.n, "solutions": [list(s.entries) for s in sols]}), 0
    return _tsv([s.entries for s in sols]), 0


def cmd_sublattices(args: argparse.Namespace) -> tuple[str, int]:
    lats = sail.enumerate_bad(args.n) if args.bad else lattice.enumerate_sublattices(args.n)
    lats = sorted(lats)
    if args.format == "json":
        items = []
        for lat in lats:
            item: dict[str, Any] = lat.to_json()
            item["bad"] = sail.is_bad(lat)
            if args.sails:
                item["sail"] = [list(p) for p in sail.compute_sail(lat).points]
            items.append(item)
        return _dump({"n": args.n, "sublattices": items}), 0
    rows = []
    for lat in lats:
        row: list[object] = [lat.d, lat.a, lat.m]
        if args.sails:
            row.append(" ".join(f"{p.x},{p.y}" for p in sail.compute_sail(lat).points))
        rows.append(row)
    return _tsv(rows), 0


def cmd_sail(args: argparse.Namespace) -> tuple[str, int]:
    try:
        lat = lattice.Sublattice2(args.d, args.a, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    s = sail.compute_sail(lat)
    if args.format == "svg":
        return render.sail_svg(s), 0
    if args.format == "json":
        central = sail.central_sailbasis(lat)
        return _dump({
            "lattice": lat.to_json(),
            "points": [list(p) for p in s.points],
            "bad": central is None,
            "central_sailbasis": None if central is None else [list(central.u), list(central.v)],
        }), 0
    return _tsv(s.points), 0


def _parse_matrix(values: Sequence[str]) -> mat2.Mat2:
    try:
        if len(values) == 1:
            return mat2.Mat2.from_rows(json.loads(values[0]))
        if len(values) == 4:
            return mat2.Mat2(*(int(v) for v in values))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse matrix: {exc}") from None
    raise UsageError("matrix must be given as four integers or a JSON array of rows")


def _rows_json(m: mat2.Mat2) -> str:
    return json.dumps(m.rows, separators=(",", ":"))


def cmd_reduce(args: argparse.Namespace) -> tuple[str, int]:
    m = _parse_matrix(args.matrix)
    if not mat2.in_P(m):
        raise UsageError(f"{m} needs non-negative entries and positive determinant")
    trace = mat2.reduce(m)
    forms = sorted(mat2.all_normal_forms(m)) if args.all_normal_forms else None
    if args.format == "json":
        obj: dict[str, Any] = {"start": m.rows, "result": trace.result.rows, "det": mat2.det(m)}
        if args.trace:
            obj["steps"] = [{"move": k.value, "matrix": x.rows} for k, x in trace.steps]
        if forms is not None:
            obj["normal_forms"] = [f.rows for f in forms]
        return _dump(obj), 0
    out = []
    if args.trace:
        out.append(f"start\t{_rows_json(m)}")
        out.extend(f"{k.value}\t{_rows_json(x)}" for k, x in trace.steps)
    out.append(f"result\t{_rows_json(trace.result)}")
    if forms is not None:
        out.extend(f"normal_form\t{_rows_json(f)}" for f in forms)
    return "\n".join(out) + "\n", 0


def cmd_gauss_search(args: argparse.Namespace) -> tuple[str, int]:
    z = gaussian.GaussInt(args.re, args.im)
    if z == gaussian.GaussInt(0, 0):
        raise UsageError("z must be non-zero")
    sols = gaussian.search_solutions(z, args.bound, canonical=args.canonical)
    if args.format == "json":
        return _dump({
            "z": [z.re, z.im],
            "bound": args.bound,
            "solutions": [[[x.re, x.im] for x in s.entries] for s in sols],
        }), 0
    return _tsv([[str(x) for x in s.entries] for s in sols]), 0


def cmd_gauss_identities(args: argparse.Namespace) -> tuple[str, int]:
    failures = gaussian.verify_identities(args.m_max, args.n_max)
    ex = gaussian.EXAMPLE_2_PLUS_3I
    lines = [
        f"odd/even identities m<={args.m_max} n<={args.n_max}\t{'PASS' if not failures else 'FAIL'}",
        f"2+3i example identity\t{'PASS' if ex.satisfies_equation() else 'FAIL'}",
    ]
    lines.extend(f"  {f}" for f in failures[:20])
    ok = not failures and ex.satisfies_equation()
    return "\n".join(lines) + "\n", 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    results = verify.run_all(args.n_max)
    width = max(len(r.name) for r in results)
    lines = [f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.detail}".rstrip() for r in results]
    return "\n".join(lines) + "\n", 0 if all(r.passed for r in results) else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sailcount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of Euclid-reduced matrices of determinant n")
    p.add_argument("n", type=_positive)
    p.add_argument("--brute", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--coprime", action="store_true", help="count only matrices with coprime entries")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("seq", help="terms 1..n_max of the count sequence")
    p.add_argument("n_max", type=_positive)
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--format", choices=["bfile", "tsv", "json"], default="bfile")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("enumerate", help="list solutions of n = ab - cd, min(a,b) > max(c,d)")
    p.add_argument("n", type=_positive)
    p.add_argument("--orbits", action="store_true", help="one row per orbit with its size")
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sublattices", help="HNF triples (d, a, m) of index-n sublattices")
    p.add_argument("n", type=_positive)
    p.add_argument("--bad", action="store_true", help="only lattices without a central sailbasis")
    p.add_argument("--sails", action="store_true", help="append each sail's point list")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_sublattices)

    p = sub.add_parser("sail", help="sail of Z(d,0) + Z(a,m)")
    p.add_argument("d", type=int)
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=["tsv", "json", "svg"], default="tsv")
    p.set_defaults(func=cmd_sail)

    p = sub.add_parser("reduce", help="Euclid-reduce a matrix given as 'a b c d' or '[[a,b],[c,d]]'")
    p.add_argument("matrix", nargs="+")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--all-normal-forms", action="store_true")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_reduce)

    g = sub.add_parser("gauss", help="the Gaussian-integer variant ab + cd = z")
    gsub = g.add_subparsers(dest="gauss_command", required=True)
    p = gsub.add_parser("search", help="bounded search for solutions")
    p.add_argument("re", type=int)
    p.add_argument("im", type=int)
    p.add_argument("--bound", type=_positive, default=5)
    p.add_argument("--canonical", action="store_true", help="one row per a<->b, c<->d swap class")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_gauss_search)
    p = gsub.add_parser("identities", help="check the two integer-z solution families")
    p.add_argument("--m-max", type=int, default=200)
    p.add_argument("--n-max", type=_positive, default=200)
    p.set_defaults(func=cmd_gauss_identities)

    p = sub.add_parser("verify", help="run every formula/oracle cross-check up to n_max")
    p.add_argument("n_max", type=_positive)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"sailcount: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
