"""Command-line front end.

Subcommands:

    chi EXPR        chi_y of a variety expression
    hodge EXPR      Hodge characteristic in u, v
    classes EXPR    characteristic class of a smooth modeled variety
    series          the genus power series to a truncation order
    verify TARGET   run an identity verification grid

Exit codes: 0 success (all checks pass), 1 verification failure, 2 usage
error (including unknown declared names), 3 expression parse error.

Output is deterministic text, or JSON with exact coefficients under
``--format json``.  Verification grids are evaluated in parameter order, so
aggregates never depend on scheduling.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fgl, motivic, verify
from .chow import ChowPresentation, hypersurface_chi
from .genus import GenusSpec
from .motivic import (
    DeclarationError,
    DeclRegistry,
    Proj,
    Prod,
    Pt,
    UnknownDeclarationError,
    VarietyExpr,
    conventional_e_polynomial,
)
from .parsing import ExprParseError, parse_expr
from .scalars import LaurentScalar
from .verify import VerifyReport

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

#: JSON shape of every ``--format json`` response.
RESULT_SCHEMA = {
    "type": "object",
    "required": ["query", "status", "result", "reports"],
    "properties": {
        "query": {"type": "string"},
        "status": {"enum": ["ok", "fail"]},
        "result": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["vars", "terms"],
                    "properties": {
                        "vars": {"type": "array", "items": {"type": "string"}},
                        "terms": {
                            "type": "array",
                            "items": {
                                "type": "array",
                                "minItems": 3,
                                "maxItems": 3,
                                "items": [
                                    {
                                        "type": "array",
                                        "items": {"type": "integer"},
                                    },
                                    {"type": "integer"},
                                    {"type": "integer"},
                                ],
                            },
                        },
                    },
                },
            ]
        },
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["identity", "params", "left", "right", "pass"],
                "properties": {
                    "identity": {"type": "string"},
                    "params": {"type": "array"},
                    "left": {"type": "string"},
                    "right": {"type": "string"},
                    "pass": {"type": "boolean"},
                },
            },
        },
    },
}

GENUS_CHOICES = {
    "hirzebruch": GenusSpec.hirzebruch,
    "chern": GenusSpec.chern,
    "todd": GenusSpec.todd,
    "l": GenusSpec.l_class,
}


class UsageError(Exception):
    """Invalid parameters detected after argparse."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chigenus",
        description="Exact chi_y genera, Hodge characteristics and "
        "characteristic-class identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--registry", metavar="PATH", help="JSON declaration file")

    p_chi = sub.add_parser("chi", help="chi_y of a variety expression")
    p_chi.add_argument("expr")
    common(p_chi)

    p_hodge = sub.add_parser("hodge", help="Hodge characteristic in u, v")
    p_hodge.add_argument("expr")
    p_hodge.add_argument(
        "--e-polynomial",
        action="store_true",
        help="emit the conventional E-polynomial (sign factor removed)",
    )
    common(p_hodge)

    p_classes = sub.add_parser(
        "classes", help="characteristic class of pt / P(n) / products"
    )
    p_classes.add_argument("expr")
    p_classes.add_argument(
        "--genus", choices=sorted(GENUS_CHOICES), default="hirzebruch"
    )
    common(p_classes)

    p_series = sub.add_parser("series", help="genus power series")
    p_series.add_argument(
        "--genus", choices=sorted(GENUS_CHOICES), default="hirzebruch"
    )
    p_series.add_argument("--order", type=int, default=6)
    common(p_series)

    p_verify = sub.add_parser("verify", help="run an identity verification grid")
    p_verify.add_argument(
        "target",
        choices=[
            "ghrr",
            "yokura",
            "reform",
            "lambda-gamma",
            "gamma",
            "higher-chern",
            "blowup",
            "vrr",
            "composition",
            "fgl",
            "all",
        ],
    )
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--k", default=None, help="range a..b for the twist")
    p_verify.add_argument("--d", type=int, default=None, help="maximal rank/dimension")
    p_verify.add_argument("--order", type=int, default=6)
    p_verify.add_argument("--degree", type=int, default=4)
    common(p_verify)

    return parser


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"expected a range a..b, got {text!r}")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}") from exc


def _load_registry(path: str | None) -> DeclRegistry:
    reg = DeclRegistry.with_builtins()
    if path:
        try:
            reg.load_json(path)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read registry {path}: {exc}") from exc
    return reg


def _laurent_terms(value: LaurentScalar) -> list:
    return [[[e], c.numerator, c.denominator] for e, c in value.terms()]


def _hodge_terms(h: motivic.HodgePolynomial) -> list:
    return [
        [[p, q], c, 1]
        for (p, q), c in sorted(h.terms.items(), key=lambda kv: (sum(kv[0]), kv[0][1]))
    ]


def _chow_terms(element) -> tuple[list[str], list]:
    """Flatten a Chow element into exponent vectors over (generators..., y)."""
    ring = element.poly.ring
    rows = []
    for mono, coeff in element.poly.sorted_terms():
        for exp, frac in coeff.terms():
            rows.append([list(mono) + [exp], frac.numerator, frac.denominator])
    return list(ring.vars) + ["y"], rows


def _series_terms(series) -> tuple[list[str], list]:
    rows = []
    for k in range(series.order + 1):
        for exp, frac in series.coefficient(k).terms():
            rows.append([[k, exp], frac.numerator, frac.denominator])
    return [series.var, "y"], rows


def _emit(
    args,
    query: str,
    result: dict | None,
    reports: list[VerifyReport],
    text_lines: list[str],
) -> int:
    status = "ok" if all(r.passed for r in reports) else "fail"
    if args.format == "json":
        payload = {
            "query": query,
            "status": status,
            "result": result,
            "reports": [
                {
                    "identity": r.identity,
                    "params": list(r.params),
                    "left": r.left,
                    "right": r.right,
                    "pass": r.passed,
                }
                for r in reports
            ],
        }
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)
    return EXIT_OK if status == "ok" else EXIT_VERIFY_FAILED


def _model_for(expr: VarietyExpr) -> ChowPresentation:
    """Chow model of a smooth expression: pt, P(n) and products thereof."""
    dims = _product_dims(expr)
    if dims is None:
        raise UsageError(
            "classes needs a smooth modeled variety: pt, P(n), or products"
        )
    if not dims:
        return ChowPresentation.point()
    if len(dims) == 1:
        return ChowPresentation.projective_space(dims[0])
    return ChowPresentation.product(dims)


def _product_dims(expr: VarietyExpr) -> list[int] | None:
    if isinstance(expr, Pt):
        return []
    if isinstance(expr, Proj):
        return [expr.n]
    if isinstance(expr, Prod):
        left = _product_dims(expr.a)
        right = _product_dims(expr.b)
        if left is None or right is None:
            return None
        return left + right
    return None


# -- verification grids -----------------------------------------------------------


def _grid(target: str, args) -> list[VerifyReport]:
    reports: list[VerifyReport] = []
    if target in ("ghrr", "all"):
        max_n = args.max_n if args.max_n is not None else 4
        ks = _parse_range(args.k) if args.k else range(-3, 6)
        for n in range(max_n + 1):
            for k in ks:
                reports.append(verify.ghrr_check(n, k))
    if target in ("yokura", "all"):
        d_max = args.d if args.d is not None else 4
        for d in range(d_max + 1):
            reports.append(verify.yokura_identity(d, args.order))
    if target in ("reform", "all"):
        d_max = args.d if args.d is not None else 3
        for d in range(d_max + 1):
            reports.append(verify.reform_identity(d))
    if target in ("lambda-gamma", "all"):
        r_max = args.d if args.d is not None else 4
        for r in range(1, r_max + 1):
            reports.append(verify.lambda_gamma_identities(r))
    if target in ("gamma", "all"):
        r_max = args.d if args.d is not None else 3
        for r in range(1, r_max + 1):
            for base in ("pt", "p1"):
                reports.append(verify.gamma_pb_relation(r, base))
    if target in ("higher-chern", "all"):
        r_max = args.d if args.d is not None else 3
        for r in range(1, r_max + 1):
            for base in ("pt", "p1"):
                reports.append(verify.higher_chern_check(r, base))
    if target in ("blowup", "all"):
        max_n = args.max_n if args.max_n is not None else 4
        for n in range(1, max_n + 1):
            for m in range(n):
                reports.append(verify.blowup_check(n, m))
    if target in ("vrr", "all"):
        max_n = args.max_n if args.max_n is not None else 3
        for n in range(max_n + 1):
            for m in range(max_n + 1):
                reports.append(verify.vrr_projection(n, m))
    if target in ("composition", "all"):
        max_n = args.max_n if args.max_n is not None else 3
        for n in range(max_n + 1):
            reports.append(verify.composition_check(n))
    if target in ("fgl", "all"):
        reports.extend(_fgl_reports(args.degree))
    return reports


def _fgl_reports(degree: int) -> list[VerifyReport]:
    reports = [
        fgl.fgl_axioms(fgl.fgl_make("additive", 8), 8),
        fgl.fgl_axioms(fgl.fgl_make("multiplicative", 8), 8),
    ]
    p1 = ChowPresentation.projective_space(1)
    reports.append(fgl.c1_tensor_check(p1.gen("h"), p1.gen("h"), p1))
    pp = ChowPresentation.product([1, 1])
    reports.append(fgl.c1_tensor_check(pp.gen("h1"), pp.gen("h2"), pp))
    relations = fgl.universal_relations(degree)
    residuals = []
    for rel in relations:
        residuals.append(rel.substitute(fgl.ADDITIVE_SPECIALIZATION))
        residuals.append(rel.substitute(fgl.MULTIPLICATIVE_SPECIALIZATION))
    pairs = [(res, LaurentScalar()) for res in residuals] or [(0, 0)]
    reports.append(
        verify.report_pairs("fgl-universal-specializations", (degree,), pairs)
    )
    return reports


# -- entry point ---------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ExprParseError as exc:
        print(f"parse error at {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnknownDeclarationError as exc:
        print(f"unknown declared name: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, DeclarationError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args) -> int:
    if args.command == "chi":
        reg = _load_registry(args.registry)
        expr = parse_expr(args.expr)
        value = motivic.chi_y(expr, reg)
        return _emit(
            args,
            args.expr,
            {"vars": ["y"], "terms": _laurent_terms(value)},
            [],
            [str(value)],
        )
    if args.command == "hodge":
        reg = _load_registry(args.registry)
        expr = parse_expr(args.expr)
        value = motivic.hodge_characteristic(expr, reg)
        if args.e_polynomial:
            value = conventional_e_polynomial(value)
        return _emit(
            args,
            args.expr,
            {"vars": ["u", "v"], "terms": _hodge_terms(value)},
            [],
            [str(value)],
        )
    if args.command == "classes":
        expr = parse_expr(args.expr)
        pres = _model_for(expr)
        cls = pres.hirzebruch_class(GENUS_CHOICES[args.genus]())
        variables, rows = _chow_terms(cls)
        return _emit(
            args,
            args.expr,
            {"vars": variables, "terms": rows},
            [],
            [str(cls)],
        )
    if args.command == "series":
        if args.order < 0:
            raise UsageError("series order must be non-negative")
        series = GENUS_CHOICES[args.genus]().series(args.order)
        variables, rows = _series_terms(series)
        return _emit(
            args,
            f"series {args.genus} order {args.order}",
            {"vars": variables, "terms": rows},
            [],
            [str(series)],
        )
    if args.command == "verify":
        reports = _grid(args.target, args)
        lines = [str(r) for r in reports]
        return _emit(args, f"verify {args.target}", None, reports, lines)
    raise UsageError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
