"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import golden
from .diagrams import (
    InputParseError,
    Permutation,
    chord_to_perm,
    make_kn,
    parse_chord_diagram,
    parse_permutation,
)
from .engine import MemoCache, WeightSystem
from .hc import WeightVector, eigenvalue, phi_casimir, to_p_basis
from .hopf import DiagramValues, kn_primitive_series, primitive_projection, wbar
from .oracle import (
    OracleLimits,
    OracleResourceError,
    cartan_part,
    expand_polynomial,
    is_central,
    w_direct,
)
from .polyring import C, Polynomial, PolynomialParseError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
CACHE_ENV = "GLWEIGHT_CACHE_DIR"
CACHE_FILE = "wgl-cache.jsonl"


class UsageError(Exception):
    pass


def _common_parser(with_defaults: bool) -> argparse.ArgumentParser:
    """Global flags; accepted before or after the subcommand.

    The copy attached to subcommands suppresses defaults so that it does not
    overwrite a value given before the subcommand.
    """
    def default(v):
        return v if with_defaults else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default=default("text"))
    common.add_argument("--cache", metavar="PATH", default=default(None),
                        help=f"JSON-lines memo cache (default: ${CACHE_ENV}/{CACHE_FILE} if set)")
    common.add_argument("--max-index-tuples", type=int,
                        default=default(OracleLimits.max_index_tuples),
                        help="oracle limit on N^m summands")
    common.add_argument("--max-terms", type=int, default=default(OracleLimits.max_terms),
                        help="oracle limit on PBW terms per element")
    return common


def _value_flags(p: argparse.ArgumentParser, primitive: bool) -> None:
    p.add_argument("--basis", choices=("c", "p"), default="c",
                   help="Casimirs C_k or shifted power sums p_k")
    p.add_argument("--sl", action="store_true", help="sl_N values (set C1 = 0)")
    if primitive:
        p.add_argument("--primitive", action="store_true",
                       help="evaluate on the projection to primitives")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glweight", parents=[_common_parser(True)],
                                     description="Universal gl_N weight system of permutations and chord diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_parser(False)

    p = sub.add_parser("perm", parents=[common], help="w_GL of a permutation, e.g. '(1 3 2)' or '[3,1,2]'")
    p.add_argument("spec")
    _value_flags(p, primitive=False)

    p = sub.add_parser("chord", parents=[common], help="w_GL of a chord diagram, e.g. '1-3,2-4' or 'K5'")
    p.add_argument("spec")
    _value_flags(p, primitive=True)

    p = sub.add_parser("kn", parents=[common], help="w_GL of K_n")
    p.add_argument("n", type=int)
    _value_flags(p, primitive=True)

    p = sub.add_parser("series", parents=[common], help="coefficients of log(1 + sum K_n x^n/n!)")
    p.add_argument("n", type=int)
    p.add_argument("--evaluate", action="store_true", help="also print w_GL of each coefficient")
    p.add_argument("--basis", choices=("c", "p"), default="c")

    p = sub.add_parser("oracle", parents=[common], help="brute-force check in U(gl_N)")
    p.add_argument("spec", help="permutation or chord diagram")
    p.add_argument("-N", "--N", type=int, default=2, dest="N")
    p.add_argument("--weight", action="append", default=[],
                   help="weight vector like '1,0' for a Harish-Chandra check (repeatable)")

    p = sub.add_parser("verify-paper", parents=[common], help="recompute the published tables")
    p.add_argument("--max-n", type=int, default=7)
    return parser


# -- helpers ---------------------------------------------------------------


def _parse_any(spec: str) -> Permutation:
    s = spec.strip()
    if s.startswith("(") or s.startswith("["):
        return parse_permutation(s)
    return chord_to_perm(parse_chord_diagram(s))


def _render(poly: Polynomial, fmt: str) -> str:
    if fmt == "latex":
        return poly.to_latex()
    if fmt == "json":
        return poly.to_json()
    return str(poly)


def _finish(value: Polynomial, args) -> Polynomial:
    if args.sl:
        if args.basis == "p":
            raise UsageError("--sl cannot be combined with --basis p")
        value = value.substitute({C(1): 0})
    if args.basis == "p":
        value = to_p_basis(value)
    return value


def _emit_value(label: str, value: Polynomial, args, out) -> None:
    if args.format == "json":
        out.write(json.dumps({"input": label, "basis": getattr(args, "basis", "c"),
                              "value": value.to_json_obj()}) + "\n")
    else:
        out.write(_render(value, args.format) + "\n")


def _cache_path(args):
    if args.cache:
        return Path(args.cache)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env) / CACHE_FILE
    return None


def _load_cache(path):
    if path is not None and path.exists():
        return MemoCache.load(path)
    return MemoCache()


# -- subcommands -----------------------------------------------------------


def cmd_perm(args, ws, out) -> int:
    p = parse_permutation(args.spec)
    _emit_value(args.spec, _finish(ws(p), args), args, out)
    return EXIT_OK


def _diagram_value(d, args, ws) -> Polynomial:
    if args.primitive:
        return wbar(d, DiagramValues(ws))
    return ws(chord_to_perm(d))


def cmd_chord(args, ws, out) -> int:
    d = parse_chord_diagram(args.spec)
    _emit_value(args.spec, _finish(_diagram_value(d, args, ws), args), args, out)
    return EXIT_OK


def cmd_kn(args, ws, out) -> int:
    if args.n < 1:
        raise UsageError(f"bad n {args.n}: K_n needs n >= 1")
    _emit_value(f"K{args.n}", _finish(_diagram_value(make_kn(args.n), args, ws), args), args, out)
    return EXIT_OK


def cmd_series(args, ws, out) -> int:
    if args.n < 1:
        raise UsageError(f"bad n {args.n}: need n >= 1")
    series = kn_primitive_series(args.n)
    values = DiagramValues(ws)
    records = []
    for n in range(1, args.n + 1):
        rec = {"n": n, "projection": series[n]}
        if args.evaluate:
            v = series.combination(n).evaluate(values)
            rec["value"] = to_p_basis(v) if args.basis == "p" else v
        records.append(rec)
    if args.format == "json":
        out.write(json.dumps([{k: (v.to_json_obj() if isinstance(v, Polynomial) else v)
                               for k, v in r.items()} for r in records]) + "\n")
        return EXIT_OK
    for r in records:
        line = f"pi(K{r['n']}) = {_render(r['projection'], args.format)}"
        if "value" in r:
            line += f"  ->  {_render(r['value'], args.format)}"
        out.write(line + "\n")
    return EXIT_OK


def cmd_oracle(args, ws, out) -> int:
    limits = OracleLimits(max_index_tuples=args.max_index_tuples, max_terms=args.max_terms)
    p = _parse_any(args.spec)
    direct = w_direct(p, args.N, limits)
    value = ws(p)
    expanded = expand_polynomial(value, args.N)
    agree = expanded == direct
    central = is_central(direct)
    checks = []
    for text in args.weight:
        w = WeightVector.parse(text)
        if w.N != args.N:
            raise UsageError(f"weight {text!r} has {w.N} entries, expected N = {args.N}")
        lhs = cartan_part(direct).evaluate(w)
        rhs = eigenvalue(to_p_basis(value), w)
        checks.append({"weight": text, "cartan": str(lhs), "eigenvalue": str(rhs), "ok": lhs == rhs})
    ok = agree and central and all(c["ok"] for c in checks)
    if args.format == "json":
        out.write(json.dumps({"input": args.spec, "N": args.N, "direct": str(direct),
                              "engine": value.to_json_obj(), "agree": agree,
                              "central": central, "weights": checks, "ok": ok}) + "\n")
    else:
        out.write(f"w_direct = {direct}\n")
        out.write(f"w_GL     = {_render(value, args.format)}\n")
        out.write(f"engine expansion {'matches' if agree else 'DIFFERS FROM'} direct sum at N={args.N}\n")
        out.write(f"central: {central}\n")
        for c in checks:
            out.write(f"weight ({c['weight']}): cartan {c['cartan']} eigenvalue {c['eigenvalue']} "
                      f"{'ok' if c['ok'] else 'MISMATCH'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def verify_paper(max_n: int = 7, ws: WeightSystem | None = None) -> list:
    """Recompute every published value; returns ``[(item, ok, detail), ...]``."""
    ws = ws or WeightSystem()
    values = DiagramValues(ws)
    results = []

    def check(item, got, want):
        ok = got == want
        results.append((item, ok, "" if ok else f"computed - table = {got - want}"))

    for k, want in sorted(golden.phi_list().items()):
        check(f"phi(C{k})", phi_casimir(k), want)
    check("example w(K2)", ws(chord_to_perm(make_kn(2))), golden.example("wgl_K2_direct"))
    check("example w((1 3 2))", ws(parse_permutation("(1 3 2)")), golden.example("wgl_132"))
    tables = {name: golden.table(name) for name in golden.TABLES}
    for n in range(2, max_n + 1):
        d = make_kn(n)
        w = values(d)
        wb = primitive_projection(d).evaluate(values)
        check(f"w_GL(K{n}) C-basis", w, tables["wgl_c"][n])
        check(f"w_GL(K{n}) p-basis", to_p_basis(w), tables["wgl_p"][n])
        check(f"wbar_GL(K{n}) C-basis", wb, tables["wbar_c"][n])
        check(f"wbar_GL(K{n}) p-basis", to_p_basis(wb), tables["wbar_p"][n])
    return results


def cmd_verify(args, ws, out) -> int:
    if not 2 <= args.max_n <= 7:
        raise UsageError("--max-n must be between 2 and 7 (the published tables)")
    start = time.perf_counter()
    results = verify_paper(args.max_n, ws)
    passed = sum(ok for _, ok, _ in results)
    if args.format == "json":
        out.write(json.dumps({"items": [{"item": i, "ok": ok, "detail": d} for i, ok, d in results],
                              "passed": passed, "total": len(results)}) + "\n")
    else:
        for item, ok, detail in results:
            out.write(f"{'PASS' if ok else 'FAIL'}  {item}" + (f"  [{detail}]" if detail else "") + "\n")
        out.write(f"{passed}/{len(results)} items agree ({time.perf_counter() - start:.1f}s)\n")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


COMMANDS = {
    "perm": cmd_perm,
    "chord": cmd_chord,
    "kn": cmd_kn,
    "series": cmd_series,
    "oracle": cmd_oracle,
    "verify-paper": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    path = _cache_path(args)
    try:
        cache = _load_cache(path)
        ws = WeightSystem(cache)
        code = COMMANDS[args.command](args, ws, out)
    except (InputParseError, PolynomialParseError, UsageError) as exc:
        sys.stderr.write(f"glweight: error: {exc}\n")
        return EXIT_USAGE
    except OracleResourceError as exc:
        sys.stderr.write(f"glweight: resource limit: {exc}\n")
        return EXIT_RESOURCE
    except ValueError as exc:
        sys.stderr.write(f"glweight: error: {exc}\n")
        return EXIT_USAGE
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        cache.save(path)
    return code


if __name__ == "__main__":
    sys.exit(main())
