"""Command-line front end.

One subcommand per pipeline stage; all output is deterministic.  Exit
codes: 0 success, 1 failed check or verification, 2 usage error, 3
malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    AlgebraError,
    NEG_ONE_MINUS_TAU,
    NEG_TAU,
    char_poly,
    count_roots_below,
    lambda_min_approx,
    parse_threshold,
)
from .censusio import (
    classification_manifest,
    read_hoffman_census,
    write_hoffman_census,
    write_manifest,
    write_named_signed,
    write_signed_census,
)
from .decomp import split_by_special_components
from .enumeration import (
    ClassificationError,
    brute_force_signed_keys,
    classify_irreducible,
    enumerate_signed,
    maximal_members,
    realize_hoffman,
    verify_extension_step,
    verify_three_vertex_diagonal_lemma,
)
from .iso import canonical_key
from .model import (
    CatalogError,
    EdgeSignedGraph,
    HoffmanGraph,
    ParseError,
    catalog,
    to_json_obj,
    to_text,
)
from .spectral import b_matrix, signed_adjacency

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3


def _read_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    from .model import parse_graph
    return parse_graph(text)


def _matrix_of(graph):
    if isinstance(graph, HoffmanGraph):
        return b_matrix(graph).entries, "B"
    return signed_adjacency(graph).entries, "M"


def _print_matrix(rows) -> None:
    width = max((len(str(x)) for row in rows for x in row), default=1)
    for row in rows:
        print(" ".join(str(x).rjust(width) for x in row))


def cmd_spectrum(args) -> int:
    g = _read_graph(args.graph)
    rows, kind = _matrix_of(g)
    poly = char_poly(rows)
    approx = lambda_min_approx(rows) if rows else None
    at_tau = count_roots_below(poly, NEG_TAU) == 0 if rows else True
    at_tau1 = count_roots_below(poly, NEG_ONE_MINUS_TAU) == 0 if rows else True
    if args.json:
        print(json.dumps({
            "graph": to_text(g),
            "matrix": [list(r) for r in rows],
            "matrix_kind": kind,
            "char_poly": list(poly.coeffs),
            "lambda_min": approx,
            "at_least_neg_tau": at_tau,
            "at_least_neg_one_minus_tau": at_tau1,
        }, sort_keys=True))
    else:
        print(f"graph: {to_text(g)}")
        print(f"{kind} matrix:")
        _print_matrix(rows)
        print(f"char poly: {poly}")
        if approx is not None:
            print(f"lambda_min ~ {approx:.9f}")
        print(f"lambda_min >= -tau: {'yes' if at_tau else 'no'}")
        print(f"lambda_min >= -1-tau: {'yes' if at_tau1 else 'no'}")
    return EXIT_OK


def cmd_check(args) -> int:
    threshold = parse_threshold(args.threshold)
    g = _read_graph(args.graph)
    rows, _ = _matrix_of(g)
    ok = count_roots_below(char_poly(rows), threshold) == 0
    print(f"lambda_min >= {threshold.name}: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_special(args) -> int:
    g = _read_graph(args.graph)
    if not isinstance(g, HoffmanGraph):
        raise ParseError("special expects a Hoffman graph")
    from .spectral import special_graph
    s = special_graph(g)
    print(json.dumps(to_json_obj(s), sort_keys=True) if args.json else to_text(s))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    if not isinstance(g, HoffmanGraph):
        raise ParseError("decompose expects a Hoffman graph")
    d = split_by_special_components(g)
    if d is None:
        print(json.dumps({"indecomposable": True}) if args.json else "indecomposable")
        return EXIT_OK
    if args.json:
        print(json.dumps({
            "indecomposable": False,
            "parts": [sorted(p) for p in d.parts],
            "part_graphs": [to_text(pg) for pg in d.part_graphs()],
        }, sort_keys=True))
    else:
        for part, pg in zip(d.parts, d.part_graphs()):
            print(f"part {sorted(part)}: {to_text(pg)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    threshold = parse_threshold(args.threshold)
    forbidden = []
    if args.forbid:
        for name in args.forbid.split(","):
            forbidden.append(catalog(name.strip()))
    census = enumerate_signed(args.max_n, threshold, forbidden,
                              connected=args.connected, jobs=args.jobs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"census-signed-n{args.max_n}.txt"
    write_signed_census(census, path)
    manifest = {
        "tool": "golden-spectra",
        "version": "0.1.0",
        "threshold": census.threshold_name,
        "forbidden": list(census.forbidden),
        "connected": census.connected,
        "max_n": census.max_n,
        "counts_per_n": {str(n): len(census.by_n[n]) for n in sorted(census.by_n)},
    }
    (out / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    for n in sorted(census.by_n):
        print(f"n={n}: {len(census.by_n[n])} graphs")
    print(f"wrote {path}")
    return EXIT_OK


def cmd_realize(args) -> int:
    g = _read_graph(args.graph)
    if not isinstance(g, EdgeSignedGraph):
        raise ParseError("realize expects an edge-signed graph")
    reals = realize_hoffman(g)
    if args.json:
        print(json.dumps([to_json_obj(r) for r in reals], sort_keys=True))
    else:
        for r in reals:
            print(to_text(r))
        print(f"{len(reals)} realizations")
    return EXIT_OK


def cmd_classify(args) -> int:
    result = classify_irreducible(jobs=args.jobs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_signed_census(result.signed_census, out / "census-signed-n7.txt")
    write_named_signed(result.exceptional, out / "census-15.txt")
    write_hoffman_census(result.irreducible, out / "census-37.txt")
    write_manifest(result, out / "manifest.json")
    print(f"signed census: {sum(len(v) for v in result.signed_census.by_n.values())}"
          f" graphs up to n={result.signed_census.max_n}")
    print(f"exceptional census: {len(result.exceptional)};"
          f" unrealizable: {len(result.unrealizable)}")
    maxi = maximal_members(result.irreducible)
    print(f"irreducible census: {len(result.irreducible.members)};"
          f" maximal: {len(maxi.members)}")
    for d in result.discrepancies:
        print(f"discrepancy: {d}")
    print(f"wrote census files to {out}")
    return EXIT_OK


def cmd_maximal(args) -> int:
    census = read_hoffman_census(args.census)
    maxi = maximal_members(census)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_hoffman_census(maxi, out / "census-18.txt")
    print(f"maximal members: {len(maxi.members)}")
    for m in maxi.members:
        print(f"  {m.name}: {to_text(m.graph)}")
    print(f"wrote {out / 'census-18.txt'}")
    return EXIT_OK


def _verify_base_case() -> bool:
    t1 = catalog("T1")
    census = enumerate_signed(5, NEG_TAU, (t1,), connected=True)
    oracle = brute_force_signed_keys(5, NEG_TAU, (t1,), connected=True)
    for n in range(1, 6):
        got = tuple(m.key for m in census.members(n))
        if got != oracle[n]:
            print(f"base-case mismatch at n={n}: {len(got)} vs {len(oracle[n])}")
            return False
        print(f"base-case n={n}: {len(got)} graphs match brute force")
    return True


def cmd_verify(args) -> int:
    ok = True
    if args.what == "base-case":
        ok = _verify_base_case()
    elif args.what == "extension":
        if args.p is None or args.q is None or args.r is None:
            print("extension requires --p --q --r", file=sys.stderr)
            return EXIT_USAGE
        ok = verify_extension_step(args.p, args.q, args.r)
        print(f"extension step ({args.p},{args.q},{args.r}): {'ok' if ok else 'FAILED'}")
    elif args.what == "lemma3x":
        ok = verify_three_vertex_diagonal_lemma()
        print(f"three-vertex diagonal sweep: {'ok' if ok else 'FAILED'}")
    elif args.what == "all":
        ok = _verify_base_case()
        sweep = verify_three_vertex_diagonal_lemma()
        print(f"three-vertex diagonal sweep: {'ok' if sweep else 'FAILED'}")
        ok = ok and sweep
        for p, q, r in ((0, 0, 4), (1, 1, 2), (2, 1, 4)):
            step = verify_extension_step(p, q, r)
            print(f"extension step ({p},{q},{r}): {'ok' if step else 'FAILED'}")
            ok = ok and step
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args) -> int:
    g = catalog(args.name)
    if args.json:
        print(json.dumps(to_json_obj(g), sort_keys=True))
    else:
        print(to_text(g))
        print(f"key: {canonical_key(g).hex()}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golden-spectra",
        description="Exact-arithmetic census of fat Hoffman graphs and "
                    "edge-signed graphs at golden-ratio eigenvalue thresholds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="matrix, char poly and threshold verdicts")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("check", help="exit 0 iff lambda_min >= threshold")
    p.add_argument("--threshold", required=True,
                   help="-tau, -1-tau, or an exact rational a/b")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("special", help="special graph of a Hoffman graph")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("decompose", help="split along special-graph components")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="level-wise signed census")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--threshold", default="-tau")
    p.add_argument("--forbid", default="", help="comma-separated catalog names")
    p.add_argument("--connected", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="census-out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("realize", help="all fat realizations of a signed graph")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("classify", help="full pipeline: census files + manifest")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="census-out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("maximal", help="maximal members of the irreducible census")
    p.add_argument("--census", default="census-out/census-37.txt")
    p.add_argument("--out", default="census-out")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("verify", help="named verification runs")
    p.add_argument("what", choices=("base-case", "extension", "lemma3x", "all"))
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="print a named graph")
    p.add_argument("name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def _preprocess(argv: list) -> list:
    """Let `--threshold -tau` parse despite the leading dash."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--threshold" and i + 1 < len(argv):
            out.append(f"--threshold={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_preprocess(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (AlgebraError, ClassificationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
