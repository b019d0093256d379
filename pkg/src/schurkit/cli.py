"""Command-line front end: ``schurkit <command> ...``.

Exit status: 0 on success, 1 on a computation-domain error (weight cap,
unknown series, failed self-test), 2 on a usage or expression syntax error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from .errors import ExpressionSyntaxError, SchurkitError, WeightCapError
from .expr import (
    coeff_to_json,
    format_universal,
    parse_cochain,
    parse_expression_with_warnings,
    parse_partition,
    symfunc_to_json,
    tensor_to_json,
)
from .partition import partitions_of
from .symfunc import Basis, Number, SymFunc, TensorExp

DEFAULT_MAX_WEIGHT = 10


class UsageError(Exception):
    """Bad command-line usage (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{message} (see {self.prog} --help)")


class Output:
    """Collects what a command prints, as text and as a JSON payload."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.basis = Basis.of(args.basis) if args.basis else None

    def symfunc(self, f: SymFunc, warnings: list[str] | None = None, flavor: str | None = None) -> tuple[str, dict]:
        if self.basis and not flavor:
            f = f.convert(self.basis)
        text = format_universal(f, flavor) if flavor else str(f)
        payload = {"kind": "symfunc", **symfunc_to_json(f, warnings, flavor)}
        return text, payload

    def tensor(self, t: TensorExp, warnings: list[str] | None = None) -> tuple[str, dict]:
        if self.basis:
            t = t.convert((self.basis,) * t.arity)
        payload = {"kind": "tensor", **tensor_to_json(t)}
        if warnings:
            payload["warnings"] = list(warnings)
        return str(t), payload

    @staticmethod
    def scalar(c: Number, warnings: list[str] | None = None) -> tuple[str, dict]:
        payload: dict[str, Any] = {"kind": "scalar", "value": coeff_to_json(c)}
        if warnings:
            payload["warnings"] = list(warnings)
        return str(c), payload


def _env_max_weight() -> int:
    raw = os.environ.get("SCHURKIT_MAX_WEIGHT")
    if raw is None or raw == "":
        return DEFAULT_MAX_WEIGHT
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"SCHURKIT_MAX_WEIGHT must be a non-negative integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("SCHURKIT_MAX_WEIGHT must be non-negative")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return value


def _expr(text: str, warnings: list[str]) -> SymFunc:
    f, w = parse_expression_with_warnings(text)
    warnings.extend(w)
    return f


def _guard(weight: int, args: argparse.Namespace, what: str) -> None:
    if weight > args.max_weight:
        raise WeightCapError(f"{what} has weight {weight}, above --max-weight {args.max_weight}")


def _inputs(args: argparse.Namespace, *texts: str) -> tuple[list[SymFunc], list[str]]:
    warnings: list[str] = []
    values = [_expr(t, warnings) for t in texts]
    for t, f in zip(texts, values):
        _guard(max(f.degree, 0), args, f"input {t!r}")
    return values, warnings


# -- commands ------------------------------------------------------------------


def cmd_prod(args, out: Output):
    from .outer_hopf import outer_product

    (f, g), w = _inputs(args, args.left, args.right)
    _guard(max(f.degree, 0) + max(g.degree, 0), args, "the product")
    return out.symfunc(outer_product(f, g), w)


def cmd_inner(args, out: Output):
    from .inner_alg import inner_product

    (f, g), w = _inputs(args, args.left, args.right)
    return out.symfunc(inner_product(f, g), w)


def cmd_coprod(args, out: Output):
    from .outer_hopf import outer_coproduct

    (f,), w = _inputs(args, args.expr)
    return out.tensor(outer_coproduct(f), w)


def cmd_icoprod(args, out: Output):
    from .inner_alg import inner_coproduct

    (f,), w = _inputs(args, args.expr)
    return out.tensor(inner_coproduct(f), w)


def cmd_skew(args, out: Output):
    from .outer_hopf import skew

    (f, g), w = _inputs(args, args.left, args.right)
    return out.symfunc(skew(f, g), w)


def cmd_antipode(args, out: Output):
    from .outer_hopf import antipode

    (f,), w = _inputs(args, args.expr)
    return out.symfunc(antipode(f), w)


def cmd_scalar(args, out: Output):
    from .symfunc import schur_scalar

    (f, g), w = _inputs(args, args.left, args.right)
    return out.scalar(schur_scalar(f, g), w)


def cmd_kostka(args, out: Output):
    from .symfunc import kostka

    mu, lam = parse_partition(args.mu), parse_partition(args.lam)
    _guard(max(sum(mu), sum(lam)), args, "the Kostka index")
    return out.scalar(kostka(mu, lam))


def cmd_char(args, out: Output):
    from .inner_alg import sn_character

    lam, rho = parse_partition(args.lam), parse_partition(args.rho)
    _guard(max(sum(lam), sum(rho)), args, "the character index")
    return out.scalar(sn_character(lam, rho))


def cmd_transition(args, out: Output):
    from .symfunc import transition_matrix

    _guard(args.weight, args, "the transition matrix")
    src, dst = Basis.of(args.source), Basis.of(args.target)
    matrix = transition_matrix(src, dst, args.weight)
    index = partitions_of(args.weight)
    width = max((len(str(x)) for row in matrix for x in row), default=1)
    lines = [f"M({src.value},{dst.value}) at weight {args.weight}: {src.value}_lam = sum_mu M[lam][mu] {dst.value}_mu"]
    lines.append("index: " + " ".join(str(lam) for lam in index))
    for lam, row in zip(index, matrix):
        lines.append(" ".join(str(x).rjust(width) for x in row) + f"   {lam}")
    payload = {
        "kind": "matrix",
        "from": src.value,
        "to": dst.value,
        "weight": args.weight,
        "index": [list(lam) for lam in index],
        "matrix": [[coeff_to_json(x) for x in row] for row in matrix],
    }
    return "\n".join(lines), payload


def cmd_series(args, out: Output):
    from .series import series

    cap = args.max_weight if args.cap is None else args.cap
    _guard(cap, args, "the series cap")
    return out.symfunc(series(args.id, cap).expansion)


def _branch_operator(args):
    from .branching import BranchingOperator

    if args.series and args.define:
        raise UsageError("give either --series or --def, not both")
    if args.series:
        return BranchingOperator.from_series(args.series)
    if args.define:
        phi = parse_cochain(args.define)
        if phi.arity != 1:
            raise SchurkitError("branching needs a 1-cochain")
        return BranchingOperator(phi)
    raise UsageError("one of --series or --def is required")


def cmd_branch(args, out: Output):
    from .branching import apply_branch, inverse_branch

    (f,), w = _inputs(args, args.input)
    op = _branch_operator(args)
    if args.inverse:
        op = inverse_branch(op)
    return out.symfunc(apply_branch(op, f), w)


def cmd_dprod(args, out: Output):
    from .branching import deformed_product

    (f, g), w = _inputs(args, args.left, args.right)
    _guard(max(f.degree, 0) + max(g.degree, 0), args, "the product")
    return out.symfunc(deformed_product(_branch_operator(args), f, g), w)


def cmd_circle(args, out: Output):
    from .clifford import base_pairing, gauged_pairing, variant_product

    (f, g), w = _inputs(args, args.left, args.right)
    _guard(max(f.degree, 0) + max(g.degree, 0), args, "the product")
    if args.gauge:
        phi = parse_cochain(args.gauge)
        if phi.arity != 1:
            raise SchurkitError("--gauge needs a 1-cochain")
        pairing = gauged_pairing(args.pairing, phi)
    else:
        pairing = base_pairing(args.pairing)
    result = variant_product(args.variant, f, g, pairing, reading=args.reading, sweedler_basis=args.sweedler_basis)
    return out.symfunc(result, w)


def cmd_nl(args, out: Output):
    from .clifford import nl_product

    lam, mu = parse_partition(args.left), parse_partition(args.right)
    _guard(sum(lam) + sum(mu), args, "the product")
    flavor = args.flavor.lower()
    return out.symfunc(nl_product(lam, mu, flavor), flavor=flavor)


def cmd_classify(args, out: Output):
    from .cohomology import classify1, classify2

    phi = parse_cochain(args.define)
    if args.arity is not None and phi.arity != args.arity:
        raise SchurkitError(f"--def gives a {phi.arity}-cochain but --arity is {args.arity}")
    verdict = classify1(phi, args.max_weight) if phi.arity == 1 else classify2(phi, args.max_weight)
    lines = [f"{phi.label}: {verdict}"] + [f"  note: {n}" for n in verdict.notes]
    payload = {
        "kind": "classification",
        "cochain": phi.label,
        "arity": phi.arity,
        "verdict": verdict.verdict,
        "max_weight": verdict.max_weight,
        "witness": verdict.witness,
        "notes": list(verdict.notes),
    }
    return "\n".join(lines), payload


def cmd_check_case(args, out: Output):
    from .outer_hopf import check_case

    rep = check_case(args.case, args.max_weight)
    payload = {
        "kind": "case",
        "case": rep.case,
        "max_weight": rep.max_weight,
        "holds": rep.holds,
        "expected": rep.expected,
        "as_expected": rep.as_expected,
        "checked": rep.checked,
        "witnesses": rep.witnesses,
        "notes": rep.notes,
    }
    return rep.summary(), payload


def cmd_selftest(args, out: Output):
    from .acceptance import format_table, run_all

    reports = run_all(args.max_weight, args.only)
    payload = {
        "kind": "selftest",
        "max_weight": args.max_weight,
        "passed": all(r.passed for r in reports),
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail, "seconds": round(r.seconds, 3)}
            for r in reports
        ],
    }
    return format_table(reports), payload


HANDLERS = {
    "prod": cmd_prod, "inner": cmd_inner, "coprod": cmd_coprod, "icoprod": cmd_icoprod,
    "skew": cmd_skew, "antipode": cmd_antipode, "scalar": cmd_scalar, "kostka": cmd_kostka,
    "transition": cmd_transition, "series": cmd_series, "branch": cmd_branch, "dprod": cmd_dprod,
    "circle": cmd_circle, "nl": cmd_nl, "classify-cochain": cmd_classify,
    "check-case": cmd_check_case, "char": cmd_char, "selftest": cmd_selftest,
}


# -- parser ------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    """Global flags; repeated on every subcommand with SUPPRESS defaults so either position works."""
    parent = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parent.add_argument("--max-weight", type=_non_negative, help="weight cap for inputs and checks (default 10, or $SCHURKIT_MAX_WEIGHT)", **kw)
    parent.add_argument("--json", action="store_true", help="print JSON instead of text", **kw)
    parent.add_argument("--basis", choices=[b.value for b in Basis], help="basis for printed results", **kw)
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurkit", description="Exact symmetric-function Hopf algebra computations.", parents=[_common(False)])
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    common = [_common(True)]

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, description=help_text, parents=common)

    for name, help_text in (
        ("prod", "outer product f·g"),
        ("inner", "inner (Kronecker) product f ⋆ g"),
        ("skew", "skew f/g"),
        ("scalar", "Schur scalar product (f|g)"),
    ):
        p = add(name, help_text)
        p.add_argument("left", help="expression, e.g. 's[2,1] + 3*s[1,1,1]'")
        p.add_argument("right", help="expression")
    for name, help_text in (
        ("coprod", "outer coproduct Δf"),
        ("icoprod", "inner coproduct δf"),
        ("antipode", "antipode S(f)"),
    ):
        add(name, help_text).add_argument("expr", help="expression")

    p = add("kostka", "Kostka number K(mu, lam) = (s_mu | h_lam)")
    p.add_argument("mu", help="shape, e.g. '[2,1]'")
    p.add_argument("lam", help="content, e.g. '[1,1,1]'")

    p = add("char", "symmetric group character chi^lam at class rho")
    p.add_argument("lam")
    p.add_argument("rho")

    p = add("transition", "transition matrix M(from,to): from_lam = sum_mu M[lam][mu] to_mu")
    p.add_argument("--from", dest="source", required=True, choices=[b.value for b in Basis])
    p.add_argument("--to", dest="target", required=True, choices=[b.value for b in Basis])
    p.add_argument("--weight", type=_non_negative, required=True)

    p = add("series", "Schur expansion of an S-function series")
    p.add_argument("--id", required=True, help="one of L M P Q A B C D E F G H R S V W")
    p.add_argument("--cap", type=_non_negative, help="truncation weight (default --max-weight)")

    for name, help_text in (("branch", "branching f -> f/Phi"), ("dprod", "deformed product Phi^-1(Phi(f)·Phi(g))")):
        p = add(name, help_text)
        p.add_argument("--series", help="series id defining Phi")
        p.add_argument("--def", dest="define", help="1-cochain spec defining Phi, e.g. 'table:{[1]:2}'")
        if name == "branch":
            p.add_argument("--input", required=True, help="expression")
            p.add_argument("--inverse", action="store_true", help="apply Phi^-1 instead")
        else:
            p.add_argument("--left", required=True)
            p.add_argument("--right", required=True)

    p = add("circle", "cliffordized product sum pi(f1 ⊗ g1) f2·g2 and its eight variants")
    p.add_argument("--pairing", default="schur", choices=["schur", "schur-inv", "schur-inverse"])
    p.add_argument("--variant", type=int, default=1, choices=range(1, 9), metavar="{1..8}")
    p.add_argument("--gauge", help="1-cochain spec phi; the pairing becomes pairing * d(phi)")
    p.add_argument("--reading", default="literal", choices=["literal", "[2]"], help="leg used by the products in variants 7 and 8")
    p.add_argument("--sweedler-basis", default="s", choices=[b.value for b in Basis], help="basis for termwise Sweedler sums")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("nl", "Newell-Littlewood product of universal characters")
    p.add_argument("--left", required=True, help="partition, e.g. '[2,1]'")
    p.add_argument("--right", required=True)
    p.add_argument("--flavor", default="o", type=str.lower, choices=["sp", "o"])

    p = add("classify-cochain", "classify a 1- or 2-cochain up to --max-weight")
    p.add_argument("--arity", type=int, choices=[1, 2])
    p.add_argument("--def", dest="define", required=True, help="cochain spec, e.g. 'series:M', 'd(series:D)', 'schur'")

    p = add("check-case", "check one of the four product/coproduct pairings")
    p.add_argument("--case", required=True, type=str.upper, choices=["I", "II", "III", "IV"])

    p = add("selftest", "run the acceptance suite with bounds min(stated, --max-weight)")
    p.add_argument("--only", type=int, nargs="+", metavar="K", help="run only these criteria (1..10)")
    return parser


def _emit(text: str, payload: dict, as_json: bool) -> None:
    print(json.dumps(payload, ensure_ascii=False) if as_json else text)


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        if args.max_weight is None:
            args.max_weight = _env_max_weight()
        as_json = args.json
        text, payload = HANDLERS[args.command](args, Output(args))
        _emit(text, payload, as_json)
        if args.command == "selftest" and not payload["passed"]:
            return 1
        return 0
    except SystemExit as exc:  # --help and --version
        return int(exc.code or 0)
    except UsageError as exc:
        _error(str(exc), 2, as_json)
        return 2
    except ExpressionSyntaxError as exc:
        _error(str(exc), 2, as_json, exc)
        return 2
    except (SchurkitError, ValueError, ArithmeticError) as exc:
        _error(str(exc), 1, as_json)
        return 1


def _error(message: str, status: int, as_json: bool, exc: ExpressionSyntaxError | None = None) -> None:
    if as_json:
        payload: dict[str, Any] = {"kind": "error", "status": status, "message": message}
        if exc is not None:
            payload["position"] = exc.position
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(f"schurkit: {message}", file=sys.stderr)
        if exc is not None and exc.text:
            print(exc.pointer(), file=sys.stderr)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
