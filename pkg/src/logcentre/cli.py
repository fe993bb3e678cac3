"""Command line front end.

Four command groups mirror the library layout::

    logcentre order    omega-center | cover-center | discriminant
    logcentre toric    qcartier | index | klt | canonical | cover | dual-gens
    logcentre ncpoly   nf | central | identity | quotient-check
    logcentre examples run | input

File arguments take the form ``PATH`` or ``PATH#name`` where ``name`` picks
one object out of a document; without a name the unique object of the
expected type is used. Every leaf command accepts ``--format text|json`` for
stdout and ``--out PATH`` to additionally write the JSON result.

Exit codes: 0 success, 2 bad usage or bad input, 3 negative verdict (the test
ran and answered no, or did not apply), 4 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import iodoc
from .casestudies import input_document, run_case_study
from .errors import (
    InputError,
    LogCentreError,
    NonterminationSuspected,
    NotApplicable,
    ResourceLimit,
)
from .iodoc import rational_to_json
from .ncpoly import builtin_system, is_central, normal_form, parse_poly, verify_identity
from .orders import cover_graded_valuations, discriminant
from .toric import (
    ConePair,
    ToricDivisor,
    canonical_divisor,
    cartier_index,
    dual_cone_generators,
    hilbert_basis,
    klt_check,
    log_canonical_cover,
    pair_functional,
    q_cartier_functional,
)
from .valmat import centralizer, omega_power

_BUILTIN_SYSTEMS = ("clifford",)


def _fmt_functional(u) -> str:
    return "(" + ",".join(str(Fraction(x)) for x in u) + ")"


def _functional_json(u):
    return None if u is None else [rational_to_json(Fraction(x)) for x in u]


def _load_target(spec: str, want: str):
    path, _, name = spec.partition("#")
    doc = iodoc.load_path(path)
    return iodoc.select_object(doc, want, name or None)


def _load_system(spec: str):
    if spec in _BUILTIN_SYSTEMS:
        return builtin_system(spec)
    return _load_target(spec, "presentation")


def _divisor_for(pair: ConePair, spec: str) -> ToricDivisor:
    if spec == "K":
        return canonical_divisor(pair.cone)
    if spec == "K+D":
        return ToricDivisor(tuple(d - 1 for d in pair.boundary.coeffs))
    try:
        coeffs = tuple(Fraction(part.strip()) for part in spec.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad divisor spec {spec!r}") from exc
    if len(coeffs) != len(pair.cone.rays):
        raise InputError(
            f"divisor spec has {len(coeffs)} coefficients, cone has {len(pair.cone.rays)} rays"
        )
    return ToricDivisor(coeffs)


def _cmd_omega_center(args):
    value = centralizer(omega_power(args.e, args.i))
    result = {"e": args.e, "i": args.i, "valuation": int(value)}
    return 0, result, str(value)


def _cmd_cover_center(args):
    values = cover_graded_valuations(args.e, args.m)
    result = {"e": args.e, "m": args.m, "valuations": list(values)}
    return 0, result, " ".join(str(v) for v in values)


def _cmd_discriminant(args):
    spec = _load_target(args.target, "order")
    div = discriminant(spec)
    result = {"order": spec.name, "divisor": str(div)}
    return 0, result, str(div)


def _cmd_qcartier(args):
    pair = _load_target(args.target, "cone_pair")
    u = q_cartier_functional(pair.cone, _divisor_for(pair, args.divisor))
    result = {"divisor": args.divisor, "functional": _functional_json(u)}
    if u is None:
        return 3, result, "none"
    return 0, result, f"u={_fmt_functional(u)}"


def _cmd_index(args):
    pair = _load_target(args.target, "cone_pair")
    u = q_cartier_functional(pair.cone, _divisor_for(pair, args.divisor))
    index = None if u is None else cartier_index(u)
    result = {"divisor": args.divisor, "index": index}
    if index is None:
        return 3, result, "none"
    return 0, result, str(index)


def _cmd_klt(args):
    pair = _load_target(args.target, "cone_pair")
    verdict = klt_check(pair)
    flag = "true" if verdict.is_klt else "false"
    if verdict.functional is None:
        result = {"klt": verdict.is_klt, "functional": None, "index": None}
        text = f"klt={flag} u=none"
    else:
        index = cartier_index(verdict.functional)
        result = {
            "klt": verdict.is_klt,
            "functional": _functional_json(verdict.functional),
            "index": index,
        }
        text = f"klt={flag} u={_fmt_functional(verdict.functional)} index={index}"
    return (0 if verdict.is_klt else 3), result, text


def _cmd_canonical(args):
    pair = _load_target(args.target, "cone_pair")
    u = q_cartier_functional(pair.cone, canonical_divisor(pair.cone))
    if u is None:
        raise NotApplicable("canonical divisor is not Q-Cartier")
    verdict = all(
        sum(Fraction(a) * b for a, b in zip(u, h)) >= 1 for h in hilbert_basis(pair.cone)
    )
    index = cartier_index(u)
    flag = "true" if verdict else "false"
    result = {"canonical": verdict, "functional": _functional_json(u), "index": index}
    text = f"canonical={flag} u={_fmt_functional(u)} index={index}"
    return (0 if verdict else 3), result, text


def _cmd_cover(args):
    pair = _load_target(args.target, "cone_pair")
    cover = log_canonical_cover(pair)
    result = {
        "degree": cover.degree,
        "lattice": [[rational_to_json(x) for x in row] for row in cover.cover_lattice.basis],
        "rays": [list(ray) for ray in cover.cover_cone.rays],
    }
    lines = [f"degree={cover.degree}"]
    lines.append(
        "lattice=" + ";".join(_fmt_functional(row) for row in cover.cover_lattice.basis)
    )
    lines.append("rays=" + ";".join(_fmt_functional(ray) for ray in cover.cover_cone.rays))
    return 0, result, "\n".join(lines)


def _cmd_dual_gens(args):
    pair = _load_target(args.target, "cone_pair")
    gens = dual_cone_generators(pair.cone)
    result = {"count": len(gens), "generators": [list(g) for g in gens]}
    lines = [f"{len(gens)} generators"]
    lines.extend(" ".join(str(x) for x in g) for g in gens)
    return 0, result, "\n".join(lines)


def _cmd_nf(args):
    system = _load_system(args.system)
    poly = parse_poly(args.expr, system.generators)
    reduced = normal_form(poly, system)
    result = {"input": args.expr, "normal_form": str(reduced)}
    return 0, result, str(reduced)


def _cmd_central(args):
    system = _load_system(args.system)
    poly = parse_poly(args.expr, system.generators)
    verdict = is_central(poly, system)
    result = {"input": args.expr, "central": verdict}
    return (0 if verdict else 3), result, f"central={'true' if verdict else 'false'}"


def _cmd_identity(args):
    system = _load_system(args.system)
    lhs = parse_poly(args.lhs, system.generators)
    rhs = parse_poly(args.rhs, system.generators)
    verdict = verify_identity(lhs, rhs, system)
    result = {"lhs": args.lhs, "rhs": args.rhs, "identity": verdict}
    return (0 if verdict else 3), result, f"identity={'true' if verdict else 'false'}"


def _cmd_quotient_check(args):
    from .ncpoly import commutative_quotient_check

    verdict = commutative_quotient_check(args.name)
    result = {"name": args.name, "consistent": verdict}
    return (0 if verdict else 3), result, f"consistent={'true' if verdict else 'false'}"


def _cmd_examples_run(args):
    report = run_case_study(args.name)
    return (0 if report.overall else 3), report.to_dict(), report.to_text()


def _cmd_examples_input(args):
    doc = input_document(args.name)
    rendered = iodoc.serialize_document(doc)
    result = json.loads(rendered)
    return 0, result, rendered.rstrip("\n")


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json"), default="text",
                        help="stdout rendering (default text)")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="also write the JSON result to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logcentre",
        description="Exact checks for hereditary order centres and toric log pairs.",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    order = groups.add_parser("order", help="graded centres of ramified matrix orders")
    order_sub = order.add_subparsers(dest="command", required=True)

    p = order_sub.add_parser("omega-center", help="centre valuation of a dualizing power")
    p.add_argument("--e", type=int, required=True, help="ramification index")
    p.add_argument("--i", type=int, required=True, help="power of the dualizing module")
    _common_flags(p)
    p.set_defaults(handler=_cmd_omega_center)

    p = order_sub.add_parser("cover-center", help="valuations of the graded cover centre")
    p.add_argument("--e", type=int, required=True, help="ramification index")
    p.add_argument("--m", type=int, required=True, help="number of graded pieces")
    _common_flags(p)
    p.set_defaults(handler=_cmd_cover_center)

    p = order_sub.add_parser("discriminant", help="discriminant divisor of an order")
    p.add_argument("target", metavar="FILE[#name]")
    _common_flags(p)
    p.set_defaults(handler=_cmd_discriminant)

    toric = groups.add_parser("toric", help="affine toric log pair classification")
    toric_sub = toric.add_subparsers(dest="command", required=True)

    p = toric_sub.add_parser("qcartier", help="supporting functional of a divisor")
    p.add_argument("target", metavar="FILE[#name]")
    p.add_argument("--divisor", default="K+D",
                   help="K, K+D (default), or comma separated coefficients")
    _common_flags(p)
    p.set_defaults(handler=_cmd_qcartier)

    p = toric_sub.add_parser("index", help="Cartier index of a divisor")
    p.add_argument("target", metavar="FILE[#name]")
    p.add_argument("--divisor", default="K+D",
                   help="K, K+D (default), or comma separated coefficients")
    _common_flags(p)
    p.set_defaults(handler=_cmd_index)

    p = toric_sub.add_parser("klt", help="Kawamata log terminal test for a pair")
    p.add_argument("target", metavar="FILE[#name]")
    _common_flags(p)
    p.set_defaults(handler=_cmd_klt)

    p = toric_sub.add_parser("canonical", help="canonical singularity test for a cone")
    p.add_argument("target", metavar="FILE[#name]")
    _common_flags(p)
    p.set_defaults(handler=_cmd_canonical)

    p = toric_sub.add_parser("cover", help="index-one cover of a standard pair")
    p.add_argument("target", metavar="FILE[#name]")
    _common_flags(p)
    p.set_defaults(handler=_cmd_cover)

    p = toric_sub.add_parser("dual-gens", help="generators of the dual cone semigroup")
    p.add_argument("target", metavar="FILE[#name]")
    _common_flags(p)
    p.set_defaults(handler=_cmd_dual_gens)

    nc = groups.add_parser("ncpoly", help="noncommutative polynomial rewriting")
    nc_sub = nc.add_subparsers(dest="command", required=True)

    p = nc_sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--system", default="clifford",
                   help="builtin name or FILE[#name] (default clifford)")
    _common_flags(p)
    p.set_defaults(handler=_cmd_nf)

    p = nc_sub.add_parser("central", help="does the element commute with all generators")
    p.add_argument("expr")
    p.add_argument("--system", default="clifford")
    _common_flags(p)
    p.set_defaults(handler=_cmd_central)

    p = nc_sub.add_parser("identity", help="are two expressions equal in the algebra")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--system", default="clifford")
    _common_flags(p)
    p.set_defaults(handler=_cmd_identity)

    p = nc_sub.add_parser("quotient-check", help="consistency of a named algebra model")
    p.add_argument("name")
    _common_flags(p)
    p.set_defaults(handler=_cmd_quotient_check)

    examples = groups.add_parser("examples", help="bundled case studies")
    ex_sub = examples.add_subparsers(dest="command", required=True)

    p = ex_sub.add_parser("run", help="run a case study and report every check")
    p.add_argument("name")
    _common_flags(p)
    p.set_defaults(handler=_cmd_examples_run)

    p = ex_sub.add_parser("input", help="print a case study input document")
    p.add_argument("name")
    _common_flags(p)
    p.set_defaults(handler=_cmd_examples_input)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, result, text = args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimit, NonterminationSuspected) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NotApplicable as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return 3
    except (LogCentreError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(result, indent=2))
    else:
        print(text)
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(result, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
