"""Command-line surface: compute, enumerate, interpolate, scan, verify.

Exit status: 0 success (and no violations), 1 usage error, 2 mathematical
violation or verification failure.  All numeric output is exact; rationals
print as "p/q" strings and counts as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import ehrhart, kogan, lattice, polyops, verify
from .combinat import (
    format_permutation,
    format_word,
    parse_partition,
    parse_permutation,
    parse_word,
)
from .gtcore import weight as pattern_weight

USAGE_ERROR = 1
VIOLATION = 2


class CliError(Exception):
    pass


def _parse_cells(text: str) -> frozenset:
    cells = set()
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise CliError(f"bad cell {chunk!r}; expected i,j pairs joined by ';'")
        cells.add((int(parts[0]), int(parts[1])))
    return frozenset(cells)


def _parse_ranges(text: str | None) -> dict:
    ranges: dict = {}
    if not text:
        return ranges
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise CliError(f"bad range {chunk!r}; expected key=value pairs joined by ';'")
        key, value = chunk.split("=", 1)
        key = key.strip()
        value = value.strip()
        if "," in value:
            ranges[key] = tuple(int(v) for v in value.split(","))
        else:
            ranges[key] = int(value)
    return ranges


def _monomial_str(exp) -> str:
    factors = [
        f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" for i, e in enumerate(exp) if e
    ]
    return "*".join(factors) if factors else "1"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _open_cache(args) -> ehrhart.ResultCache | None:
    path = os.environ.get("GTKEY_CACHE") or args.cache
    return ehrhart.ResultCache(path) if path else None


# --- subcommands ---------------------------------------------------------------

def cmd_key(args) -> int:
    lam = parse_partition(args.lam)
    if (args.sigma is None) == (args.word is None):
        raise CliError("key needs exactly one of --sigma or --word")
    if args.word is not None:
        from .combinat import is_reduced, word_to_perm

        word = parse_word(args.word)
        n = max(len(lam), max(word, default=0) + 1)
        if not is_reduced(word, n):
            raise CliError(f"word {args.word!r} is not reduced")
        sigma = word_to_perm(word, n)
    else:
        sigma = parse_permutation(args.sigma)
    method = args.method
    polys = {}
    if method in ("operators", "both"):
        polys["operators"] = polyops.key_via_operators(lam, sigma)
    if method in ("faces", "both"):
        polys["faces"] = kogan.key_via_faces(lam, sigma)
    agree = len({p for p in polys.values()}) == 1
    poly = next(iter(polys.values()))
    payload = {
        "lambda": list(lam),
        "sigma": list(sigma),
        "method": method,
        "terms": poly.to_json(),
        "term_count": len(poly.terms),
        "at_ones": str(polyops.eval_ones(poly)),
    }
    if method == "both":
        payload["methods_agree"] = agree
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [[t["coeff"], " ".join(str(e) for e in t["exp"])] for t in poly.to_json()]
        _emit(args, _csv_text(["coeff", "exp"], rows))
    else:
        lines = [f"key polynomial, lambda={list(lam)} sigma={list(sigma)}"]
        if method == "both":
            lines.append(f"methods agree: {agree}")
        lines.append(str(poly))
        lines.append(f"{len(poly.terms)} distinct monomials, value at ones {polyops.eval_ones(poly)}")
        _emit(args, "\n".join(lines))
    return 0 if agree else VIOLATION


def cmd_schur(args) -> int:
    lam = parse_partition(args.lam)
    n = args.n or len(lam)
    if args.mu is not None:
        mu = parse_partition(args.mu)
        poly = polyops.skew_schur(lam, mu, n)
        desc = {"lambda": list(lam), "mu": list(mu), "n": n}
    else:
        poly = polyops.schur(lam, n)
        desc = {"lambda": list(lam), "n": n}
    payload = dict(desc, terms=poly.to_json(), at_ones=str(polyops.eval_ones(poly)))
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [[t["coeff"], " ".join(str(e) for e in t["exp"])] for t in poly.to_json()]
        _emit(args, _csv_text(["coeff", "exp"], rows))
    else:
        _emit(args, f"{poly}\nvalue at ones {polyops.eval_ones(poly)}")
    return 0


def cmd_kostka(args) -> int:
    lam = parse_partition(args.lam)
    if args.nu is not None:
        mu = parse_partition(args.mu) if args.mu else ()
        nu = parse_partition(args.nu)
        value = polyops.skew_kostka(lam, mu, nu)
        desc = {"lambda": list(lam), "mu": list(mu), "nu": list(nu)}
    else:
        if args.mu is None:
            raise CliError("kostka needs --mu (content), optionally --nu for skew shapes")
        mu = parse_partition(args.mu)
        value = polyops.kostka(lam, mu)
        desc = {"lambda": list(lam), "mu": list(mu)}
    payload = {"spec": desc, "count": str(value)}
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        _emit(args, _csv_text(["spec", "count"], [[json.dumps(desc), str(value)]]))
    else:
        _emit(args, str(value))
    return 0


def cmd_faces(args) -> int:
    n = args.n
    if args.sigma:
        tau = parse_permutation(args.sigma)
        faces = list(kogan.enumerate_reduced_faces(n, tau))
    else:
        import itertools

        faces = []
        for tau in itertools.permutations(range(1, n + 1)):
            faces.extend(kogan.enumerate_reduced_faces(n, tau))
    records = []
    for f in faces:
        t = kogan.face_type(f)
        records.append(
            {
                "n": f.n,
                "cells": [list(c) for c in f.sorted_cells()],
                "word": list(kogan.face_word(f)),
                "reduced": t is not None,
                "type": list(t) if t else None,
            }
        )
    if args.format == "json":
        _emit(args, json.dumps(records, indent=2))
    elif args.format == "csv":
        rows = [
            [
                r["n"],
                ";".join(f"{i},{j}" for i, j in r["cells"]),
                format_word(r["word"]),
                r["reduced"],
                format_permutation(r["type"]) if r["type"] else "not reduced",
            ]
            for r in records
        ]
        _emit(args, _csv_text(["n", "cells", "word", "reduced", "type"], rows))
    else:
        lines = [f"{len(records)} reduced Kogan faces"]
        for r in records:
            cells = ";".join(f"{i},{j}" for i, j in r["cells"])
            type_str = format_permutation(r["type"]) if r["type"] else "not reduced"
            lines.append(
                f"cells [{cells or '-'}] word ({format_word(r['word']) or '-'}) type {type_str}"
            )
        _emit(args, "\n".join(lines))
    return 0


def _points_spec(args):
    lam = parse_partition(args.lam)
    nu = parse_partition(args.nu) if args.nu else None
    if args.mu is not None:
        mu = parse_partition(args.mu)
        n = args.n or len(lam)
        return lattice.skew_spec(lam, mu, weight=None if nu is None else tuple(pad_to(nu, n)), n=n)
    n = args.n or len(lam)
    lam_p = pad_to(lam, n)
    return lattice.gt_spec(lam_p, weight=None if nu is None else tuple(pad_to(nu, n)))


def pad_to(seq, n):
    seq = tuple(seq)
    return seq + (0,) * (n - len(seq)) if len(seq) < n else seq


def cmd_points(args) -> int:
    k = args.k
    if args.sigma:
        lam = parse_partition(args.lam)
        sigma = parse_permutation(args.sigma)
        points = kogan.complex_points(lam, sigma, k)
        desc = {"family": "key_complex", "lambda": list(lam), "sigma": list(sigma)}
        count = kogan.complex_count(lam, sigma, k)
    else:
        spec = _points_spec(args)
        desc = spec.describe()
        if args.count_only:
            points = []
            count = lattice.count_points(spec, k)
        else:
            points = list(lattice.enumerate_points(spec, k))
            count = len(points)
    if args.count_only:
        payload = {"spec": desc, "k": k, "count": str(count)}
        if args.format == "json":
            _emit(args, json.dumps(payload, indent=2))
        elif args.format == "csv":
            _emit(args, _csv_text(["spec", "k", "count"], [[json.dumps(desc), k, str(count)]]))
        else:
            _emit(args, str(count))
        return 0
    records = [
        {"rows": [list(r) for r in p.rows], "weight": list(pattern_weight(p))}
        for p in points
    ]
    if args.format == "json":
        _emit(args, json.dumps({"spec": desc, "k": k, "count": str(count), "points": records}, indent=2))
    elif args.format == "csv":
        rows = [
            [
                " ".join(str(x) for r in reversed(p["rows"]) for x in r),
                " ".join(str(w) for w in p["weight"]),
                _monomial_str(p["weight"]),
            ]
            for p in records
        ]
        _emit(args, _csv_text(["entries_top_down", "weight", "monomial"], rows))
    else:
        lines = [f"{count} lattice points"]
        for p in points:
            lines.append(str(p))
            lines.append(f"weight {tuple(pattern_weight(p))} monomial {_monomial_str(pattern_weight(p))}")
        _emit(args, "\n".join(lines))
    return 0


def _ehrhart_object(args) -> ehrhart.CountedObject:
    lam = parse_partition(args.lam)
    if args.object == "gt":
        return ehrhart.gt_object(lam)
    if args.object == "skew":
        mu = parse_partition(args.mu) if args.mu else ()
        return ehrhart.skew_object(lam, mu, n=args.n or len(lam))
    if args.object == "gt-weight":
        if args.mu is None:
            raise CliError("gt-weight needs --mu")
        return ehrhart.gt_weight_object(lam, parse_partition(args.mu))
    if args.object == "skew-weight":
        mu = parse_partition(args.mu) if args.mu else ()
        if args.nu is None:
            raise CliError("skew-weight needs --nu")
        nu = parse_partition(args.nu)
        return ehrhart.skew_weight_object(lam, mu, nu, n=args.n or len(lam))
    if args.object == "key-complex":
        if args.sigma is None:
            raise CliError("key-complex needs --sigma")
        return ehrhart.key_complex_object(lam, parse_permutation(args.sigma))
    if args.object == "kogan-face":
        if args.cells is None:
            raise CliError("kogan-face needs --cells \"i,j;i,j;...\"")
        n = args.n or len(lam)
        face = kogan.KoganFace(n, _parse_cells(args.cells))
        return ehrhart.kogan_face_object(pad_to(lam, n), face)
    raise CliError(f"unknown object {args.object!r}")


def cmd_ehrhart(args) -> int:
    obj = _ehrhart_object(args)
    cache = _open_cache(args)
    result = ehrhart.ehrhart_of(obj, degree_bound=args.degree_bound, cache=cache)
    payload = result.to_json()
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [[
            json.dumps(payload["object"]),
            payload["degree_bound"],
            " ".join(payload["poly"]),
            payload["nonneg"],
            payload["valid"],
            payload["empty"],
        ]]
        _emit(args, _csv_text(["object", "degree_bound", "coeffs", "nonneg", "valid", "empty"], rows))
    else:
        lines = [
            f"object {json.dumps(payload['object'])}",
            f"polynomial {payload['poly_str']}",
            f"coefficients (low degree first) {payload['poly']}",
            f"nonneg {payload['nonneg']}  valid {payload['valid']}  empty {payload['empty']}",
        ]
        _emit(args, "\n".join(lines))
    return 0 if result.valid else VIOLATION


def cmd_scan(args) -> int:
    cache = _open_cache(args)
    ranges = _parse_ranges(args.ranges)
    report = ehrhart.scan(args.family, ranges, cache=cache)
    payload = report.to_json()
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [
            [
                json.dumps(e.result.object),
                " ".join(e.result.poly.coeff_strings()),
                e.result.nonneg,
                e.result.valid,
                e.result.empty,
            ]
            for e in report.entries
        ]
        _emit(args, _csv_text(["object", "coeffs", "nonneg", "valid", "empty"], rows))
    else:
        lines = [
            f"family {report.family} ranges {json.dumps(ranges)}",
            f"checked {len(report.entries)} objects",
            f"violations {len(report.violations)}  verification failures {len(report.failures)}",
        ]
        for r in report.violations:
            lines.append(f"VIOLATION {json.dumps(r.object)} -> {r.poly}")
        for r in report.failures:
            lines.append(f"VERIFY-FAIL {json.dumps(r.object)} -> {r.poly}")
        _emit(args, "\n".join(lines))
    return report.status


def cmd_verify(args) -> int:
    cache = _open_cache(args)
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    all_checks = []
    for name in names:
        for check in verify.run_suite(name, cache=cache):
            all_checks.append((name, check))
    ok = all(c.ok for _, c in all_checks)
    if args.format == "json":
        payload = {
            "suites": names,
            "ok": ok,
            "checks": [dict(c.to_json(), suite=name) for name, c in all_checks],
        }
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        rows = [[name, c.name, c.ok, c.detail] for name, c in all_checks]
        _emit(args, _csv_text(["suite", "check", "ok", "detail"], rows))
    else:
        lines = []
        for name, c in all_checks:
            status = "ok" if c.ok else "FAIL"
            detail = f"  ({c.detail})" if c.detail and not c.ok else ""
            lines.append(f"[{status}] {name}: {c.name}{detail}")
        lines.append(f"{'all checks passed' if ok else 'FAILURES PRESENT'}")
        _emit(args, "\n".join(lines))
    return 0 if ok else VIOLATION


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gtkey",
        description="Exact key polynomials, GT lattice points and Ehrhart scans",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--cache", help="JSON-lines cache for interpolation results")

    p = sub.add_parser("key", help="key polynomial by operators, faces, or both")
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1,0,0")
    p.add_argument("--sigma", help="permutation, e.g. [2,4,3,1]")
    p.add_argument("--word", help="reduced word as comma-separated letters, e.g. 2,3,2,1")
    p.add_argument("--method", choices=["operators", "faces", "both"], default="both")
    common(p)
    p.set_defaults(func=cmd_key)

    p = sub.add_parser("schur", help="Schur or skew Schur polynomial")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", help="inner shape for a skew Schur polynomial")
    p.add_argument("--n", type=int, help="number of variables (default: parts of lambda)")
    common(p)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("kostka", help="Kostka or skew Kostka coefficient")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", help="content (straight) or inner shape (with --nu)")
    p.add_argument("--nu", help="content of a skew Kostka coefficient")
    common(p)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("faces", help="reduced Kogan faces, optionally of one type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", help="face type in one-line notation")
    common(p)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("points", help="lattice points of a GT object")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", help="bottom row: selects the skew polytope")
    p.add_argument("--nu", help="weight filter")
    p.add_argument("--sigma", help="key-complex points for this permutation")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=1, help="dilation factor")
    p.add_argument("--count-only", action="store_true")
    common(p)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("ehrhart", help="interpolated Ehrhart polynomial of an object")
    p.add_argument(
        "--object",
        required=True,
        choices=["gt", "skew", "gt-weight", "skew-weight", "key-complex", "kogan-face"],
    )
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu")
    p.add_argument("--nu")
    p.add_argument("--sigma")
    p.add_argument("--cells", help='face cells as "i,j;i,j;..."')
    p.add_argument("--n", type=int)
    p.add_argument("--degree-bound", type=int)
    common(p)
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("scan", help="non-negativity scan over a family grid")
    p.add_argument(
        "--family",
        required=True,
        choices=["skew_gt", "stretched_kostka", "skew_kostka", "key_complex"],
    )
    p.add_argument("--ranges", help='bounds, e.g. "n=3;max_shape=3,2,1" or "max_size=6;max_rows=4"')
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run a named fixture suite")
    p.add_argument(
        "--suite",
        default="all",
        choices=sorted(verify.SUITES) + ["all"],
    )
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the documented code
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
