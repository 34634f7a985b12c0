"""Command-line interface: ``gwa <verb> ...``.

Exit codes: 0 on success, 1 when the answer is a mathematical negative
(not central, not a unit, not isomorphic, invalid derivation), 2 on usage
or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .algebra import PRESETS, Family, preset
from .derivations import (Derivation, decompose_involution, decompose_quantum, det_M,
                          build_matrix_M)
from .errors import GwaError, InvalidDerivation, PullbackFailure
from .localized import LocDerivation, decompose_torus_derivation, embed_quantum
from .parsing import parse_algebra, parse_element, parse_loc_algebra
from .structure import central_generators, is_central, iso_involution, unit_classify

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class _Negative(Exception):
    """A well-formed question whose answer is no."""


def _emit(args, text: str, data: dict):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _ring(args):
    if getattr(args, "localized", None):
        return parse_loc_algebra(args.localized)
    if not args.algebra:
        raise argparse.ArgumentTypeError("--algebra (or --localized) is required")
    return parse_algebra(args.algebra)


def _load_derivation(path: str) -> Derivation:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    missing = {"algebra", "Dh", "Dx", "Dy"} - set(data)
    if missing:
        raise argparse.ArgumentTypeError(f"derivation file lacks {', '.join(sorted(missing))}")
    A = parse_algebra(data["algebra"])
    return Derivation(A, *(parse_element(data[k], A) for k in ("Dh", "Dx", "Dy")))


# -- verbs ----------------------------------------------------------------

def cmd_normalize(args):
    e = parse_element(args.expr, _ring(args))
    _emit(args, str(e), {"result": str(e)})


def cmd_mul(args):
    R = _ring(args)
    out = R.one
    for text in args.exprs:
        out = out * parse_element(text, R)
    _emit(args, str(out), {"result": str(out)})


def cmd_comm(args):
    R = _ring(args)
    a, b = parse_element(args.a, R), parse_element(args.b, R)
    out = a * b - b * a
    _emit(args, str(out), {"result": str(out)})


def cmd_central(args):
    A = parse_algebra(args.algebra)
    if args.expr is None:
        gens = [str(g) for g in central_generators(A)]
        _emit(args, "\n".join(gens) if gens else "(scalars only)", {"generators": gens})
        return
    ok = is_central(A, parse_element(args.expr, A))
    _emit(args, "CENTRAL" if ok else "NOT CENTRAL", {"central": ok})
    if not ok:
        raise _Negative


def cmd_unit(args):
    A = parse_algebra(args.algebra)
    form = unit_classify(A, parse_element(args.expr, A))
    if form is None:
        _emit(args, "NOT A UNIT", {"unit": False})
        raise _Negative
    text = f"UNIT coefficient={form.coefficient} h_power={form.h_power} x_power={form.x_power}"
    _emit(args, text, {"unit": True, "coefficient": str(form.coefficient),
                       "h_power": form.h_power, "x_power": form.x_power})


def cmd_classify(args):
    A = parse_algebra(args.algebra)
    fam = A.family
    data = {"family": str(fam), "algebra": str(A), "a_is_monomial": A.a_is_monomial}
    if fam is Family.QUANTUM:
        data["root_of_unity"] = A.sigma.is_root_of_unity
    _emit(args, str(fam), data)


def cmd_validate_der(args):
    D = _load_derivation(args.file)
    report = D.validate()
    if report.valid:
        _emit(args, "VALID", {"valid": True, "failures": []})
        return
    lines = ["INVALID"] + [f"({i}) {rel}: residual {r}" for i, rel, r in report.failures]
    _emit(args, "\n".join(lines),
          {"valid": False,
           "failures": [{"relation": i, "text": rel, "residual": str(r)}
                        for i, rel, r in report.failures]})
    raise _Negative


def cmd_apply_der(args):
    D = _load_derivation(args.file)
    if not D.validate().valid:
        _emit(args, "INVALID", {"valid": False})
        raise _Negative
    out = D.apply(parse_element(args.expr, D.algebra))
    _emit(args, str(out), {"result": str(out)})


def _decompose_torus_like(D: Derivation) -> dict:
    """Quantum family with monomial a: the algebra is the quantum torus."""
    A = D.algebra
    emb = embed_quantum(A)
    loc = LocDerivation(emb.target, emb(D.Dx), emb(D.Dh))
    t, alpha, beta = decompose_torus_derivation(emb.target, loc)
    return {"t": str(emb.pullback(t)), "alpha": str(alpha), "beta": str(beta)}


def cmd_decompose_der(args):
    D = _load_derivation(args.file)
    A = D.algebra
    try:
        if A.family is Family.INVOLUTION:
            t, z1, z2 = decompose_involution(D)
            data = {"t": str(t), "z1": str(z1), "z2": str(z2)}
        elif A.family is Family.QUANTUM and A.a_is_monomial:
            if not D.validate().valid:
                raise InvalidDerivation("images violate the defining relations")
            data = _decompose_torus_like(D)
        else:
            t, alpha = decompose_quantum(D)
            data = {"t": str(t), "alpha": str(alpha)}
    except (InvalidDerivation, PullbackFailure) as exc:
        _emit(args, f"INVALID: {exc}", {"valid": False, "error": str(exc)})
        raise _Negative from None
    _emit(args, "\n".join(f"{k} = {v}" for k, v in data.items()), data)


def cmd_iso(args):
    A1, A2 = parse_algebra(args.a1), parse_algebra(args.a2)
    w = iso_involution(A1, A2)
    if w is None:
        _emit(args, "NOT ISOMORPHIC", {"isomorphic": False})
        raise _Negative
    d = w.to_dict()
    lines = ["ISOMORPHIC",
             f"p = {d['p']}", f"l = {d['l']}", f"tau = {d['tau']}", f"eps = {d['eps']}",
             f"alpha = {d['alpha']}",
             f"h1 -> {d['h']}", f"x1 -> {d['x']}", f"y1 -> {d['y']}"]
    _emit(args, "\n".join(lines), {"isomorphic": True, **d})


def cmd_det_m(args):
    if args.n < 1:
        raise argparse.ArgumentTypeError("n must be a positive integer")
    value = det_M(args.n)
    data = {"n": args.n, "det": str(value)}
    if args.matrix:
        data["matrix"] = [[str(c) for c in row] for row in build_matrix_M(args.n)]
    _emit(args, str(value), data)


def cmd_preset_list(args):
    specs = {name: str(preset(name)) for name in PRESETS}
    _emit(args, "\n".join(f"{k}: {v}" for k, v in specs.items()), {"presets": specs})


# -- argument parsing -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gwa",
        description="Exact arithmetic, derivations and isomorphisms for degree-one "
                    "generalized Weyl algebras over Q(s), q = s^2.")
    parser.add_argument("--json", action="store_true", help="structured JSON output")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def with_algebra(p, localized=False):
        p.add_argument("--algebra", "-A", help="preset name or 'sigma=c*h^e;a=<expr>'")
        if localized:
            p.add_argument("--localized", "-L", help="localized algebra 'phi=c*v^e' (elements in u, v)")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return p

    p = with_algebra(sub.add_parser("normalize", help="print the normal form of an element"), True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = with_algebra(sub.add_parser("mul", help="multiply elements left to right"), True)
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_mul)

    p = with_algebra(sub.add_parser("comm", help="commutator a*b - b*a"), True)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_comm)

    p = with_algebra(sub.add_parser("central", help="center generators, or test one element"))
    p.add_argument("expr", nargs="?")
    p.set_defaults(func=cmd_central)

    p = with_algebra(sub.add_parser("unit", help="classify a unit of an involution algebra"))
    p.add_argument("expr")
    p.set_defaults(func=cmd_unit)

    p = with_algebra(sub.add_parser("classify", help="family of an algebra"))
    p.set_defaults(func=cmd_classify)

    for verb, func, helptext in (("validate-der", cmd_validate_der, "check a derivation file"),
                                 ("decompose-der", cmd_decompose_der, "inner + outer decomposition")):
        p = sub.add_parser(verb, help=helptext)
        p.add_argument("file", help='JSON {"algebra", "Dh", "Dx", "Dy"}')
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)

    p = sub.add_parser("apply-der", help="apply a validated derivation to an element")
    p.add_argument("file")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_apply_der)

    p = sub.add_parser("iso", help="isomorphism test for involution algebras")
    p.add_argument("--a1", required=True)
    p.add_argument("--a2", required=True)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("det-m", help="determinant of the matrix (q^(ij) - 1)")
    p.add_argument("n", type=int)
    p.add_argument("--matrix", action="store_true", help="include the matrix in JSON output")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_det_m)

    p = sub.add_parser("preset-list", help="list named algebras")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_preset_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except _Negative:
        return EXIT_NEGATIVE
    except (GwaError, argparse.ArgumentTypeError, OSError, json.JSONDecodeError, TypeError) as exc:
        print(f"gwa {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
