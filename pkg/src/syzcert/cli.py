"""Command-line interface.

Exit codes: 0 ok; 1 input error; 2 nothing certified (``certify``);
3 budget exceeded, partial output (``betti``); 4 golden-file regression
(``paper-tables``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import ceil
from typing import Any

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOTHING_CERTIFIED = 2
EXIT_BUDGET = 3
EXIT_REGRESSION = 4


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which is taken
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    from .slopes import as_fraction

    try:
        return as_fraction(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2)


# -- certify -----------------------------------------------------------------------


def build_spec(args: argparse.Namespace):
    from .certifier import EmbeddingSpec
    from .slopes import FormalBundle

    rank = args.n + 1
    mu_minus = args.mu_minus
    if args.semistable:
        if args.mu_plus is not None and args.mu_plus != mu_minus:
            raise InputError("a semistable bundle needs mu-plus = mu-minus")
        degree = mu_minus * rank
        if degree.denominator != 1:
            raise InputError(f"slope {mu_minus} is not attainable in rank {rank}")
        if args.degree is not None and args.degree != degree:
            raise InputError(f"degree {args.degree} != rank * slope = {degree}")
        bundle = FormalBundle.semistable_bundle(rank, int(degree))
    else:
        degree = ceil(mu_minus * rank) if args.degree is None else args.degree
        # a rank-(r-1) quotient has slope >= mu_minus, so this bounds every subbundle
        mu_plus = degree - (rank - 1) * mu_minus if args.mu_plus is None else args.mu_plus
        bundle = FormalBundle(
            rank, degree, mu_minus, mu_plus, mu_minus_exact=args.mu_minus_exact
        )
    return EmbeddingSpec(args.genus, args.n, args.a, args.b, bundle, args.e)


def cmd_certify(args: argparse.Namespace) -> int:
    from .certifier import best_certificate, certificate_markdown

    cert = best_certificate(build_spec(args))
    _emit(certificate_markdown(cert) if args.format == "markdown" else cert.to_json())
    return EXIT_OK if cert.p_certified is not None else EXIT_NOTHING_CERTIFIED


# -- veronese ------------------------------------------------------------------------


def cmd_veronese(args: argparse.Namespace) -> int:
    from .knowledge import INFINITE, veronese_bounds, veronese_status

    if args.n < 1 or args.d < 1:
        raise InputError("need n >= 1 and d >= 1")
    holds, fails = veronese_bounds(args.n, args.d)
    doc: dict[str, Any] = {"n": args.n, "d": args.d, "holds_through": holds, "fails_from": fails}
    if args.p is not None:
        if args.p < 0:
            raise InputError("p must be >= 0")
        doc["p"] = args.p
        doc["status"] = veronese_status(args.n, args.d, args.p).value
        if args.koszul:
            from .koszul import property_np, veronese_ring

            ring = veronese_ring(args.n, args.d, q_max=4)
            doc["koszul"] = property_np(ring, args.p, args.field, budget=args.budget).to_dict()
    if args.format == "json":
        _emit(_dump(doc))
    elif args.format == "tsv":
        _emit("\t".join(doc) + "\n" + "\t".join(_tsv_cell(v) for v in doc.values()))
    else:
        lines = [f"# Property N_p for (P^{args.n}, O({args.d}))", ""]
        lines.append(
            "- holds for all p" if holds == INFINITE else f"- holds for p <= {holds}"
        )
        lines.append("- no known failure" if fails is None else f"- fails for p >= {fails}")
        if "status" in doc:
            lines.append(f"- N_{args.p}: {doc['status']}")
        if "koszul" in doc:
            lines.append(f"- Koszul check (j <= {doc['koszul']['j_cut']}): {doc['koszul']['status']}")
        _emit("\n".join(lines))
    return EXIT_OK


def _tsv_cell(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


# -- betti ---------------------------------------------------------------------------


def cmd_betti(args: argparse.Namespace) -> int:
    from .koszul import betti_strip, parse_ring_spec

    ring = parse_ring_spec(args.ring, q_max=args.j_max + 1)
    if ring.q_max < args.j_max + 1:
        raise InputError(f"ring file stops at degree {ring.q_max}; j-max must be < {ring.q_max}")
    strip = betti_strip(ring, args.p_max, args.j_max, args.field, args.budget)
    if args.format == "json":
        _emit(strip.to_json())
    else:
        _emit(strip.to_tsv())
    if strip.holes:
        cells = ", ".join(f"({i},{j})" for i, j in strip.holes)
        print(f"budget exceeded at {cells}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


# -- paper-tables ------------------------------------------------------------------------


def cmd_paper_tables(args: argparse.Namespace) -> int:
    from .tables import diff_against_golden, render_report

    report = render_report(include_koszul=not args.no_koszul)
    _emit(report)
    if args.no_koszul:
        return EXIT_OK
    golden = None
    if args.golden:
        with open(args.golden) as fh:
            golden = fh.read()
    diff = diff_against_golden(report, golden)
    if diff:
        print("\n".join(diff), file=sys.stderr)
        return EXIT_REGRESSION
    return EXIT_OK


# -- optimality ----------------------------------------------------------------------------


def cmd_optimality(args: argparse.Namespace) -> int:
    from .optimality import optimality_witness

    report = optimality_witness(args.n, args.g, args.p)
    _emit(report.to_markdown() if args.format == "markdown" else _dump(report.to_dict()))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .koszul.complex import parse_field

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "markdown", "tsv"])
    common.add_argument(
        "--field",
        type=parse_field,
        default=None,
        help="QQ | prime:P | primes:P1,P2 | two-primes[:SEED] (env SYZ_FIELD)",
    )
    common.add_argument("--budget", type=int, default=None, help="dense-entry budget per differential (env SYZ_BUDGET)")

    parser = _Parser(prog="syzcert", description="Certify and recompute Property N_p.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", parents=[common], help="certify N_p from numerical data")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--n", type=int, required=True, help="fiber dimension (rank E = n + 1)")
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--mu-minus", type=_rational, required=True)
    c.add_argument("--mu-plus", type=_rational)
    c.add_argument("--degree", type=int, help="deg E (default: least integer >= rank * mu-minus)")
    c.add_argument("--semistable", action="store_true")
    c.add_argument("--mu-minus-exact", action="store_true")
    c.add_argument("--e", type=int, help="invariant e of a rational ruled surface (genus 0)")
    c.set_defaults(func=cmd_certify, default_format="json")

    v = sub.add_parser("veronese", parents=[common], help="known N_p status of (P^n, O(d))")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--p", type=int)
    v.add_argument("--koszul", action="store_true", help="also recompute the verdict from Koszul cohomology")
    v.set_defaults(func=cmd_veronese, default_format="markdown")

    b = sub.add_parser("betti", parents=[common], help="graded Betti numbers k_{i,j}")
    b.add_argument("--ring", required=True, help="veronese:n,d | scroll:a1,a2,... | monomial file")
    b.add_argument("--p-max", type=int, required=True)
    b.add_argument("--j-max", type=int, default=2)
    b.set_defaults(func=cmd_betti, default_format="tsv")

    t = sub.add_parser("paper-tables", parents=[common], help="regenerate tables and diff against golden files")
    t.add_argument("--golden", help="compare against this file instead of the packaged one")
    t.add_argument("--no-koszul", action="store_true", help="skip the Koszul rows (no golden diff)")
    t.set_defaults(func=cmd_paper_tables, default_format="markdown")

    o = sub.add_parser("optimality", parents=[common], help="numeric chain of the sharpness witness")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--g", type=int, required=True)
    o.add_argument("--p", type=int, required=True)
    o.set_defaults(func=cmd_optimality, default_format="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    from .certifier import CertificateInconsistency
    from .koszul.complex import default_budget, default_field
    from .optimality import NoHyperellipticWitness
    from .slopes import HypothesisError

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = args.format or args.default_format
    try:
        if args.field is None:
            args.field = default_field()
        if args.budget is None:
            args.budget = default_budget()
        return args.func(args)
    except NoHyperellipticWitness as exc:
        print(f"syzcert: rejected: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, HypothesisError, ValueError, IndexError, OSError) as exc:
        print(f"syzcert: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CertificateInconsistency as exc:  # a bug, not bad input
        print(f"syzcert: internal inconsistency: {exc}", file=sys.stderr)
        raise


if __name__ == "__main__":
    sys.exit(main())
