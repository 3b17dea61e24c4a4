"""Command-line front end.

Exit codes: 0 success, 1 result mismatch (or failed self-check),
2 usage error, 3 output I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .cases import main_theorem_mismatches, run_full_suite
from .certificates import dumps, table_row
from .design import (
    DesignParams, check_bounds, derived_counts, divisibility_check, non_integral_lambdas,
)
from .groups import FAMILIES, catalog_for_degree, make_group, sl_order
from .residual import DEFAULT_C_SET, SearchBounds, residual_certificate, search_residual
from .solver import FILTERS

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class OutputError(Exception):
    pass


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="ascii")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror}") from exc
    with fh:
        yield fh


def _self_check(certs) -> bool:
    from .checker import check_all

    problems = check_all(certs)
    for msg in problems:
        print(f"self-check: {msg}", file=sys.stderr)
    print(f"self-check: {len(certs)} certificates, {len(problems)} problems", file=sys.stderr)
    return not problems


# -- check ----------------------------------------------------------------------

def check_report(params: DesignParams) -> dict:
    counts = derived_counts(params)
    bad = non_integral_lambdas(params)
    divs = divisibility_check(params)
    report = {
        "params": {"t": params.t, "v": params.v, "k": params.k, "lambda": params.lam},
        "trivial": not params.nontrivial,
        "lambda_s": {str(s): {"value": str(val), "integral": val.denominator == 1}
                     for s, val in counts.lambda_s.items()},
        "b": str(counts.b),
        "r": str(counts.r),
        "divisibility": [{"s": s, "passes": ok, "numerator": str(num), "denominator": str(den)}
                         for s, ok, num, den in divs],
        "first_failure_s": min(bad, default=None),
        "bounds": None,
    }
    admissible = not bad
    if params.nontrivial:
        br = check_bounds(params)
        report["bounds"] = {
            "tits_holds": br.tits_holds,
            "cameron_holds": br.cameron_holds,
            "cameron_equality": br.cameron_equality,
            "equality_triple_known": br.equality_triple_known,
            "k_max_t6": br.k_max_t6,
        }
        admissible = admissible and br.tits_holds and br.cameron_holds
        if params.t == 6 and params.lam == 1:
            admissible = admissible and params.k <= br.k_max_t6
    report["admissible"] = admissible
    return report


def cmd_check(args) -> int:
    try:
        params = DesignParams(args.t, args.v, args.k, args.lam)
    except ValueError as exc:
        print(f"check: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = check_report(params)
    if args.format == "json":
        print(json.dumps(rep))
        return EXIT_OK
    p = rep["params"]
    print(f"{p['t']}-({p['v']},{p['k']},{p['lambda']})" + ("  [trivial]" if rep["trivial"] else ""))
    for s, info in rep["lambda_s"].items():
        print(f"  lambda_{s} = {info['value']}" + ("" if info["integral"] else "  NOT INTEGRAL"))
    print(f"  b = {rep['b']}, r = {rep['r']}")
    if rep["bounds"]:
        for key, val in rep["bounds"].items():
            print(f"  {key}: {val}")
    if rep["first_failure_s"] is not None:
        print(f"  first divisibility failure at s={rep['first_failure_s']}")
    print("admissible" if rep["admissible"] else "inadmissible")
    return EXIT_OK


# -- eliminate ------------------------------------------------------------------

def cmd_eliminate(args) -> int:
    certs = run_full_suite(disabled_filters=tuple(args.skip_filter or ()))
    ok = True
    if args.self_check:
        ok = _self_check(certs)
    with _output(args.output) as out:
        for cert in certs:
            out.write((dumps(cert) if args.format == "json" else table_row(cert)) + "\n")
    problems = main_theorem_mismatches(certs)
    for msg in problems:
        print(f"mismatch: {msg}", file=sys.stderr)
    print(f"{len(certs)} certificates, "
          f"{sum(c.verdict == 'open' for c in certs)} open, {len(problems)} mismatches", file=sys.stderr)
    return EXIT_OK if ok and not problems else EXIT_MISMATCH


# -- search-open ----------------------------------------------------------------

def cmd_search_open(args) -> int:
    kw = dict(s_max=args.s_max, u_max=args.u_max, q_bit_limit=args.q_bit_limit,
              p_set=tuple(args.p or (2, 3)))
    try:
        if args.c_max is not None:
            if args.c:
                raise ValueError("--c and --c-max are exclusive")
            bounds = SearchBounds.free_c(args.c_max, **kw)
        else:
            bounds = SearchBounds(c_set=tuple(args.c or DEFAULT_C_SET), **kw)
    except ValueError as exc:
        print(f"search-open: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = search_residual(bounds)
    cert = residual_certificate(result)
    ok = _self_check([cert]) if args.self_check else True
    with _output(args.output) as out:
        for cell in result.cells:
            if args.format == "json":
                out.write(json.dumps({"cell": {"p": str(cell.p), "s": str(cell.s), "u": str(cell.u),
                                               "c": str(cell.c), "status": cell.status,
                                               "hit_k": None if cell.hit_k is None else str(cell.hit_k)}},
                                     separators=(",", ":")) + "\n")
            else:
                hit = "" if cell.hit_k is None else f" HIT k={cell.hit_k}"
                out.write(f"p={cell.p} s={cell.s} u={cell.u} c={cell.c} {cell.status}{hit}\n")
        out.write((dumps(cert) if args.format == "json" else table_row(cert)) + "\n")
    print(f"cells searched {result.searched}, skipped {result.skipped}, hits {len(result.hits)}, "
          f"survivors {len(result.survivors)}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- groups ---------------------------------------------------------------------

def _group_json(g) -> dict:
    d = {"family": g.family, "name": g.name, "degree": g.degree, "order": str(g.order),
         "two_point_stab_order": str(g.two_point_stab_order)}
    d.update({k: v for k, v in g.params.items() if k not in d})
    if g.family == "SLd2":
        d["point_stabilizer_order"] = str(sl_order(g.params["d"]))
    return d


def cmd_groups(args) -> int:
    if args.groups_cmd == "list":
        degrees = [args.degree] if args.degree else [8, 11, 12, 16, 22, 23, 24, 32]
        for v in degrees:
            if v < 4:
                print("groups: degree must be >= 4", file=sys.stderr)
                return EXIT_USAGE
            for g in catalog_for_degree(v):
                print(json.dumps(_group_json(g)))
        return EXIT_OK
    key = {"AGL1": "q", "AGammaL1": "q", "SLd2": "d", "Alt": "v", "Mathieu": "v",
           "PSL2": "q", "PGL2": "q", "PSigmaL2": "q", "PGammaL2": "q"}.get(args.family)
    try:
        if key is None:
            g = make_group(args.family)
        elif args.param is None:
            raise ValueError(f"{args.family} needs a parameter ({key})")
        else:
            g = make_group(args.family, **{key: args.param})
    except (ValueError, KeyError) as exc:
        print(f"groups: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(_group_json(g)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steiner6", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="necessary conditions for a t-(v,k,lambda) design")
    for name in ("t", "v", "k"):
        p.add_argument(name, type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eliminate", help="run every case elimination and emit certificates")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", "-o")
    p.add_argument("--self-check", action="store_true", help="re-verify every certificate first")
    # fault injection for tests
    p.add_argument("--skip-filter", action="append", choices=FILTERS, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("search-open", help="bounded search of the open PGammaL(2,p^e) cases")
    p.add_argument("--s-max", type=int, default=1000)
    p.add_argument("--u-max", type=int, default=2)
    p.add_argument("--p", type=int, action="append", choices=(2, 3))
    p.add_argument("--c", type=int, action="append", help="repeatable; default 1 2 4 5")
    p.add_argument("--c-max", type=int, help="free-c mode: every c in 1..C_MAX")
    p.add_argument("--q-bit-limit", type=int, default=65536)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", "-o")
    p.add_argument("--self-check", action="store_true")
    p.set_defaults(func=cmd_search_open)

    p = sub.add_parser("groups", help="3-homogeneous group catalog")
    gsub = p.add_subparsers(dest="groups_cmd", required=True)
    g = gsub.add_parser("list")
    g.add_argument("--degree", type=int)
    g = gsub.add_parser("order")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("param", type=int, nargs="?")
    p.set_defaults(func=cmd_groups)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OutputError as exc:
        print(f"steiner6: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
