"""Command-line front end.

Every subcommand prints a JSON object (``--json``) or a short human summary.
Numbers that can exceed machine range or are rational are rendered as
decimal or "p/q" strings. Exit codes: 0 success, 1 domain error, 2 usage
error, 3 a counterexample was found (scan hits, failed design verification).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .catalog import catalog_code
from .criteria import (
    am_designs_verified,
    am_t_values,
    criterion,
    find_design_weights,
    zdual_expansion,
)
from .designs import MAX_TSUBSETS, check_t_design_direct, check_t_design_harmonic, delta_s, support_design
from .enumerators import macwilliams_transform
from .exceptions import DomainError
from .feasibility import DEFAULT_LEMMA_NMAX, DEFAULT_SCAN_NMAX, conjecture_probe, lemma_scan, scan
from .gf2 import DEFAULT_MAX_DIM, BinaryCode, code_profile, dual_code, parse_generator_matrix, weight_distribution
from .harmonics import MAX_H, MAX_N, harm_basis, harm_dimension

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3

SCHEMAS = {
    "code_profile": 1,
    "weight_enumerator": 1,
    "harmonic_function": 1,
    "design_check": 1,
    "delta_s": 1,
    "am_report": 1,
    "am_verification": 1,
    "criterion_value": 1,
    "zdual_expansion": 1,
    "design_weight_search": 1,
    "feasibility_record": 1,
    "lemma_scan": 1,
    "conjecture_probe": 1,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def load_code(spec: str) -> BinaryCode:
    """A catalog name, or ``@path`` to a generator-matrix text file."""
    if spec.startswith("@"):
        path = Path(spec[1:])
        try:
            text = path.read_text()
        except OSError as exc:
            raise DomainError(f"cannot read {path}: {exc}") from exc
        return parse_generator_matrix(text)
    return catalog_code(spec)


def _workers(args) -> int:
    return args.threads if args.threads > 0 else (os.cpu_count() or 1)


def _emit(payload: dict, as_json: bool, summary: str | None = None):
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(summary if summary is not None else json.dumps(payload, sort_keys=True, indent=2))


# ---------------------------------------------------------------- handlers


def _cmd_code(args) -> int:
    code = load_code(args.code)
    prof = code_profile(code, args.max_dim)
    dist = weight_distribution(code, args.max_dim)
    payload = {"profile": prof.to_dict(), "weight_distribution": [str(c) for c in dist.coeffs]}
    _emit(payload, args.json, f"[{prof.n},{prof.k},{prof.d}] d_dual={prof.d_dual} weights={list(prof.weights)}")
    return EXIT_OK


def _cmd_macwilliams(args) -> int:
    code = load_code(args.code)
    dist = weight_distribution(code, args.max_dim)
    image = macwilliams_transform(dist, code.k)
    payload = {"n": code.n, "k": code.k, "W": [str(c) for c in dist.coeffs], "W_dual": [str(c) for c in image.coeffs]}
    if args.check:
        direct = weight_distribution(dual_code(code), args.max_dim)
        payload["matches_direct_dual"] = direct == image
    _emit(payload, args.json)
    return EXIT_OK


def _cmd_harm(args) -> int:
    basis = harm_basis(args.n, args.h, method=args.method, max_n=args.max_n, max_h=args.max_h)
    payload = {
        "n": args.n,
        "h": args.h,
        "method": args.method,
        "dimension": len(basis),
        "rank_dimension": harm_dimension(args.n, args.h),
        "basis": [f.to_dict() for f in basis] if args.full else [],
    }
    _emit(payload, args.json, f"dim Harm_{args.h}(n={args.n}) = {len(basis)}")
    return EXIT_OK


def _cmd_design(args) -> int:
    code = load_code(args.code)
    design = support_design(code, args.weight, args.max_dim)
    if args.method == "harmonic":
        res = check_t_design_harmonic(design, args.t)
    else:
        res = check_t_design_direct(design, args.t, args.max_subsets)
    payload = {"code": args.code, "weight": args.weight, "blocks": len(design.blocks), **res.to_dict()}
    verdict = f"{args.t}-({code.n},{args.weight},{res.lambda_})" if res.is_design else "not a design"
    _emit(payload, args.json, f"weight {args.weight}, {len(design.blocks)} blocks: {verdict}")
    return EXIT_OK


def _cmd_delta_s(args) -> int:
    code = load_code(args.code)
    res = delta_s(code, args.t_max, args.max_dim, args.max_subsets)
    _emit(res.to_dict(), args.json, f"delta={res.delta} s={res.s}")
    return EXIT_OK


def _cmd_am(args) -> int:
    code = load_code(args.code)
    report = am_t_values(code, args.max_dim)
    payload = report.to_dict()
    status = EXIT_OK
    if args.verify:
        if report.t is None:
            payload["verification"] = None
        else:
            ver = am_designs_verified(code, report.t, args.max_dim)
            payload["verification"] = ver.to_dict()
            if not ver.all_confirmed:
                print("design promised by the Assmus-Mattson theorem failed verification", file=sys.stderr)
                status = EXIT_COUNTEREXAMPLE
    _emit(payload, args.json, f"t values: {list(report.t_values)}")
    return status


def _cmd_criterion(args) -> int:
    if args.w is not None:
        val = criterion(args.case, args.n, args.d1, args.d2, args.t, args.w)
        _emit(val.to_dict(), args.json, f"value = {val.value}")
        return EXIT_OK
    res = find_design_weights(args.case, args.n, args.d1, args.d2, args.t, args.w_max, args.normalization)
    _emit(res.to_dict(), args.json, f"zero w: {list(res.criterion_zero_ws)}")
    return EXIT_OK


def _cmd_zdual(args) -> int:
    res = zdual_expansion(args.case, args.n, args.d1, args.d2, args.t, args.normalization)
    _emit(res.to_dict(), args.json)
    return EXIT_OK


def _cmd_scan(args) -> int:
    res = scan(args.case, args.nmax, _workers(args))
    sys.stdout.write(res.json_lines())
    if res.feasible:
        print(f"{len(res.feasible)} feasible putative enumerator(s) found", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_lemma(args) -> int:
    res = lemma_scan(args.degree, args.nmax, _workers(args))
    _emit(res.to_dict(), args.json, f"solutions (n, exponent): {[[s.n, s.exponent] for s in res.solutions]}")
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    res = conjecture_probe(args.ell, args.n, args.weights)
    _emit(res.to_dict(), args.json, f"outcome: {res.outcome}")
    return EXIT_COUNTEREXAMPLE if res.outcome == "refute" else EXIT_OK


# ---------------------------------------------------------------- parser


def _common(p: argparse.ArgumentParser, code: bool = False):
    p.add_argument("--json", action="store_true", help="print one JSON object on stdout")
    p.add_argument("--threads", type=int, default=1, help="worker processes (0 = all cores)")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM, help="largest code dimension to enumerate")
    if code:
        p.add_argument("--code", required=True, help="catalog name or @path to a generator matrix file")


def _params(p: argparse.ArgumentParser):
    p.add_argument("--case", choices=("four", "five"), required=True)
    for name in ("n", "d1", "d2", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--normalization", choices=("published", "solved"), default="published")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="amdesigns", description="Assmus-Mattson designs, harmonic enumerators and feasibility scans")
    parser.add_argument("--manifest", action="store_true", help="print package and schema versions")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("code", help="parameters and weight distribution")
    _common(p, code=True)
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("macwilliams", help="dual weight distribution via MacWilliams")
    _common(p, code=True)
    p.add_argument("--check", action="store_true", help="also enumerate the dual and compare")
    p.set_defaults(func=_cmd_macwilliams)

    p = sub.add_parser("harm", help="basis and dimension of a harmonic space")
    _common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--method", choices=("tableau", "elimination"), default="tableau")
    p.add_argument("--full", action="store_true", help="include the basis functions")
    p.add_argument("--max-n", type=int, default=MAX_N)
    p.add_argument("--max-h", type=int, default=MAX_H)
    p.set_defaults(func=_cmd_harm)

    p = sub.add_parser("design", help="test a support design for strength t")
    _common(p, code=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("direct", "harmonic"), default="direct")
    p.add_argument("--max-subsets", type=int, default=MAX_TSUBSETS)
    p.set_defaults(func=_cmd_design)

    p = sub.add_parser("delta-s", help="minimum and maximum design strength over weights")
    _common(p, code=True)
    p.add_argument("--t-max", type=int, default=6)
    p.add_argument("--max-subsets", type=int, default=MAX_TSUBSETS)
    p.set_defaults(func=_cmd_delta_s)

    p = sub.add_parser("am", help="Assmus-Mattson t values")
    _common(p, code=True)
    p.add_argument("--verify", action="store_true", help="count every promised design")
    p.set_defaults(func=_cmd_am)

    p = sub.add_parser("criterion", help="evaluate the extra-design criterion")
    _common(p)
    _params(p)
    p.add_argument("--w", type=int, help="single w; omit to scan 0..--w-max")
    p.add_argument("--w-max", type=int, default=10)
    p.set_defaults(func=_cmd_criterion)

    p = sub.add_parser("zdual", help="expand the dual harmonic quotient polynomial")
    _common(p)
    _params(p)
    p.set_defaults(func=_cmd_zdual)

    p = sub.add_parser("scan", help="search for putative weight enumerators")
    _common(p)
    p.add_argument("--case", choices=("four", "five"), required=True)
    p.add_argument("--nmax", type=int, default=DEFAULT_SCAN_NMAX)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("lemma", help="power-of-two values of the binomial sums")
    _common(p)
    p.add_argument("--degree", type=int, choices=(4, 5), required=True)
    p.add_argument("--nmax", type=int, default=DEFAULT_LEMMA_NMAX)
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("conjecture", help="probe the binomial-sum cardinality relation")
    _common(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.set_defaults(func=_cmd_conjecture)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 2
        return int(exc.code or 0)
    if args.manifest:
        print(json.dumps({"version": __version__, "schemas": SCHEMAS}, sort_keys=True))
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
