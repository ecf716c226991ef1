"""Command-line interface: one subcommand per computation, JSON in and
JSON out.

Standard output carries exactly one JSON document; all diagnostics go
to standard error.  Identical invocations produce identical bytes (all
collections are emitted in canonical order).  Exit status: 0 success,
2 validation error, 3 enumeration-budget or unsupported-size error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import flagmoduli, hilbert, mixedvol, polymatroid, schubert
from .errors import BudgetExceededError, UnsupportedSizeError, ValidationError
from .schemas import SCHEMAS

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3


def _fail(message: str, code: int) -> int:
    print(json.dumps({"error": message}), file=sys.stderr)
    return code


def _load_document(args: argparse.Namespace) -> dict:
    if getattr(args, "json", None) is not None and getattr(args, "input", None) is not None:
        raise ValidationError("give either --input or --json, not both")
    if getattr(args, "json", None) is not None:
        text = args.json
        origin = "--json"
    elif getattr(args, "input", None) is not None:
        if args.input == "-":
            text = sys.stdin.read()
            origin = "stdin"
        else:
            try:
                with open(args.input, "r", encoding="utf-8") as handle:
                    text = handle.read()
            except OSError as exc:
                raise ValidationError(f"cannot read {args.input}: {exc}") from exc
            origin = args.input
    else:
        raise ValidationError("this subcommand needs --input or --json")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"malformed JSON from {origin} at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"malformed {what} {text!r}: expected comma-separated integers") from exc


def _emit(document: object, args: argparse.Namespace) -> int:
    payload = json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n"
    sys.stdout.write(payload)
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(payload)
    return EXIT_OK


def _support_view(support: polymatroid.Support, args: argparse.Namespace, bound: int) -> dict:
    """Support JSON in the requested coordinate convention."""
    if getattr(args, "exponent_coordinates", False):
        return support.complement(bound).to_json_dict()
    return support.to_json_dict()


# -- subcommand handlers -----------------------------------------------------


def _cmd_schubert(args: argparse.Namespace) -> int:
    if args.perm is not None:
        pi = schubert.Permutation(_parse_int_list(args.perm, "permutation"))
    else:
        pi = schubert.Permutation.from_json_dict(_load_document(args))
    poly = schubert.schubert_polynomial(pi)
    support = poly.support()
    polytope = schubert.schubert_support_polytope(pi)
    bound = pi.p - 1
    convention = "exponent" if args.exponent_coordinates else "msupp"
    result = {
        "permutation": pi.to_json_dict(),
        "length": schubert.length(pi),
        "polynomial": poly.to_json_dict(),
        "pretty": poly.pretty(),
        "has_negative_coefficients": bool(poly.negative_exponents()),
        "support_convention": convention,
        "support": _support_view(support.complement(bound), args, bound),
        "theta_polytope_support": _support_view(polytope, args, bound),
    }
    result["agrees"] = result["support"] == result["theta_polytope_support"]
    return _emit(result, args)


def _cmd_theta(args: argparse.Namespace) -> int:
    if args.subset is None:
        raise ValidationError("theta needs --subset (possibly empty string for the empty set)")
    subset = _parse_int_list(args.subset, "subset")
    if args.perm is not None:
        pi = schubert.Permutation(_parse_int_list(args.perm, "permutation"))
        diagram = schubert.rothe_diagram(pi)
        result = {
            "diagram": diagram.to_json_dict(),
            "subset": sorted(subset),
            "theta": schubert.theta(diagram, subset),
            "length": schubert.length(pi),
            "projection_codim": schubert.projection_codim(pi, subset),
        }
    else:
        diagram = schubert.Diagram.from_json_dict(_load_document(args))
        result = {
            "diagram": diagram.to_json_dict(),
            "subset": sorted(subset),
            "theta": schubert.theta(diagram, subset),
        }
    return _emit(result, args)


def _cmd_msupp_rank(args: argparse.Namespace) -> int:
    rank = polymatroid.RankFunction.from_json_dict(_load_document(args))
    report = polymatroid.validate_rank_function(rank)
    if not report.valid:
        print(json.dumps(report.to_json_dict(), sort_keys=True), file=sys.stderr)
        return EXIT_VALIDATION
    support = polymatroid.msupp_from_rank(rank)
    return _emit(
        {"support": support.to_json_dict(), "count": len(support), "weight": support.weight},
        args,
    )


def _cmd_msupp_linear(args: argparse.Namespace) -> int:
    family = polymatroid.SubspaceFamily.from_json_dict(_load_document(args))
    rank = polymatroid.linear_rank(family)
    support = polymatroid.msupp_from_rank(rank)
    return _emit(
        {
            "rank_function": rank.to_json_dict(),
            "support": support.to_json_dict(),
            "count": len(support),
        },
        args,
    )


def _cmd_mconvex(args: argparse.Namespace) -> int:
    support = polymatroid.Support.from_json_dict(_load_document(args))
    report = polymatroid.is_mconvex(support)
    return _emit(report.to_json_dict(), args)


def _cmd_kpoly(args: argparse.Namespace) -> int:
    ideal = hilbert.MonomialIdeal.from_json_dict(_load_document(args))
    poly = hilbert.kpolynomial(ideal)
    return _emit({"polynomial": poly.to_json_dict(), "pretty": poly.pretty()}, args)


def _cmd_multidegree(args: argparse.Namespace) -> int:
    ideal = hilbert.MonomialIdeal.from_json_dict(_load_document(args))
    print(
        "warning: output is the degree-filtered K-polynomial; it equals the "
        "multidegree polynomial only when the quotient has no irrelevant torsion, "
        "which is not verified here",
        file=sys.stderr,
    )
    poly = hilbert.multidegree_polynomial(ideal)
    codim = ideal.grading.nvars - hilbert.quotient_krull_dimension(ideal)
    return _emit(
        {
            "polynomial": poly.to_json_dict(),
            "pretty": poly.pretty(),
            "codimension": codim,
        },
        args,
    )


def _cmd_sr_ideal(args: argparse.Namespace) -> int:
    complex_ = hilbert.SimplicialComplex.from_json_dict(_load_document(args))
    ideal = hilbert.stanley_reisner_ideal(complex_, vars_per_vertex=args.vars_per_vertex)
    return _emit(ideal.to_json_dict(), args)


def _cmd_facet_support(args: argparse.Namespace) -> int:
    complex_ = hilbert.SimplicialComplex.from_json_dict(_load_document(args))
    support = hilbert.facet_support(complex_)
    return _emit({"support": support.to_json_dict(), "count": len(support)}, args)


def _parse_polytopes(document: dict) -> list[mixedvol.LatticePolytope]:
    if not isinstance(document, dict) or "polytopes" not in document:
        raise ValidationError("input JSON needs a 'polytopes' array")
    return [mixedvol.LatticePolytope.from_json_dict(k) for k in document["polytopes"]]


def _cmd_mixedvol(args: argparse.Namespace) -> int:
    table = mixedvol.mixed_volumes(_parse_polytopes(_load_document(args)))
    return _emit(table.to_json_dict(), args)


def _cmd_positivity(args: argparse.Namespace) -> int:
    document = _load_document(args)
    polytopes = _parse_polytopes(document)
    if args.n is not None:
        n = _parse_int_list(args.n, "type vector")
    elif "n" in document:
        n = [int(x) for x in document["n"]]
    else:
        raise ValidationError("positivity needs --n or an 'n' field in the input")
    return _emit(
        {
            "n": list(n),
            "positive": mixedvol.positivity_criterion(polytopes, n),
            "segments": mixedvol.segments_criterion(polytopes, n),
        },
        args,
    )


def _cmd_flag(args: argparse.Namespace) -> int:
    if args.p is None:
        raise ValidationError("flag needs --p")
    support = flagmoduli.flag_msupp(args.p)
    report = flagmoduli.flag_comparator_report(args.p)
    return _emit(
        {
            "support": support.to_json_dict(),
            "count": len(support),
            "comparator": report,
        },
        args,
    )


def _cmd_m0n(args: argparse.Namespace) -> int:
    if args.p is None:
        raise ValidationError("m0n needs --p")
    support = flagmoduli.m0n_msupp(args.p)
    if args.count_only:
        return _emit(len(support), args)
    return _emit({"support": support.to_json_dict(), "count": len(support)}, args)


_HANDLERS = {
    "schubert": _cmd_schubert,
    "theta": _cmd_theta,
    "msupp-rank": _cmd_msupp_rank,
    "msupp-linear": _cmd_msupp_linear,
    "mconvex": _cmd_mconvex,
    "kpoly": _cmd_kpoly,
    "multidegree": _cmd_multidegree,
    "sr-ideal": _cmd_sr_ideal,
    "facet-support": _cmd_facet_support,
    "mixedvol": _cmd_mixedvol,
    "positivity": _cmd_positivity,
    "flag": _cmd_flag,
    "m0n": _cmd_m0n,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multidegree",
        description="Exact multidegree supports from combinatorial data.",
    )
    parser.add_argument(
        "--schema",
        metavar="NAME",
        choices=sorted(SCHEMAS),
        help="print the JSON schema for an input type and exit "
        f"(one of: {', '.join(sorted(SCHEMAS))})",
    )
    sub = parser.add_subparsers(dest="subcommand")

    def common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        p.add_argument("--output", help="also write the JSON result to this path")
        p.add_argument("-v", "--verbose", action="count", default=0)
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="worker threads for internal loops (never changes output bytes)",
        )
        if with_input:
            p.add_argument("--input", help="path of the input JSON document ('-' for stdin)")
            p.add_argument("--json", help="inline input JSON document")

    p = sub.add_parser("schubert", help="Schubert polynomial and its supports")
    common(p)
    p.add_argument("--perm", help="one-line notation, e.g. 3,2,1")
    p.add_argument(
        "--exponent-coordinates",
        action="store_true",
        help="report supports as polynomial exponents m instead of multidegree types n",
    )

    p = sub.add_parser("theta", help="column-word statistic of a diagram")
    common(p)
    p.add_argument("--perm", help="use the Rothe diagram of this permutation")
    p.add_argument("--subset", help="comma-separated rows, e.g. 2,3 (empty for the empty set)")

    for name, help_text in [
        ("msupp-rank", "lattice points of the base polytope of a rank function"),
        ("msupp-linear", "rank function and support of a subspace family"),
        ("mconvex", "exchange-axiom check for a support"),
        ("kpoly", "K-polynomial of a monomial ideal"),
        ("multidegree", "degree-filtered K-polynomial of a monomial ideal"),
        ("facet-support", "incidence vectors of the top-dimensional facets"),
        ("mixedvol", "mixed-volume table of a polytope tuple"),
    ]:
        p = sub.add_parser(name, help=help_text)
        common(p)

    p = sub.add_parser("sr-ideal", help="Stanley-Reisner ideal of a simplicial complex")
    common(p)
    p.add_argument(
        "--vars-per-vertex",
        type=int,
        default=1,
        help="variables per vertex (2 gives the one-projective-line-per-vertex grading)",
    )

    p = sub.add_parser("positivity", help="positivity and independent-segments criteria")
    common(p)
    p.add_argument("--n", help="type vector, e.g. 1,1,1")

    p = sub.add_parser("flag", help="flag variety support and comparator report")
    common(p, with_input=False)
    p.add_argument("--p", type=int, help="number of projective factors")

    p = sub.add_parser("m0n", help="moduli-of-rational-curves support (Catalan count)")
    common(p, with_input=False)
    p.add_argument("--p", type=int, help="number of projective factors")
    p.add_argument("--count-only", action="store_true", help="print only the cardinality")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.schema is not None:
        sys.stdout.write(
            json.dumps(SCHEMAS[args.schema], sort_keys=True, separators=(",", ":")) + "\n"
        )
        return EXIT_OK
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return EXIT_VALIDATION
    if getattr(args, "threads", 1) < 1:
        return _fail("--threads must be at least 1", EXIT_VALIDATION)
    try:
        return _HANDLERS[args.subcommand](args)
    except ValidationError as exc:
        return _fail(str(exc), EXIT_VALIDATION)
    except (BudgetExceededError, UnsupportedSizeError) as exc:
        return _fail(str(exc), EXIT_BUDGET)


if __name__ == "__main__":
    sys.exit(main())
