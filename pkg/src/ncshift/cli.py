"""Command-line front end.

Subcommands: expand (shifted generators, power sums, ribbons into the
S-basis), convert (between the S, L, Psi and R generating sets), verify
(named identity suites), specialize (matrix evaluation of a variable
assignment file).  Exit status 0 when every requested check passes, 1 on a
verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import NCElement
from .families import (
    lambda_words_to_s,
    psi_words_to_s,
    s_to_lambda,
    s_to_psi,
    shift_Lambda,
)
from .params import ParamSubstitution, as_fraction
from .ribbon import (
    Composition,
    RibbonElement,
    from_ribbon_basis,
    ribbon_shifted,
    to_ribbon_basis,
)
from .shifts import shift_S
from .special import VariableAssignment, spec_value
from .suites import SUITES, run_suite

MAX_RESEED_ENV = "NCSHIFT_MAX_RESEED"


def _usage(msg: str) -> SystemExit:
    print(f"error: {msg}", file=sys.stderr)
    return SystemExit(2)


def _parse_comp(text: str) -> Composition:
    try:
        return Composition(tuple(int(p) for p in text.split(",")))
    except ValueError as e:
        raise _usage(str(e))


def _parse_params(text: str) -> ParamSubstitution:
    if text == "symbolic":
        return ParamSubstitution.symbolic()
    if text.startswith("equidistant:"):
        parts = text.split(":", 1)[1].split(",")
        if len(parts) != 2:
            raise _usage("--params equidistant:c,base")
        return ParamSubstitution.equidistant(as_fraction(parts[0]), as_fraction(parts[1]))
    if text.startswith("file:"):
        with open(text.split(":", 1)[1]) as fh:
            table = json.load(fh)
        return ParamSubstitution.explicit({int(k): as_fraction(v) for k, v in table.items()})
    raise _usage("--params symbolic | equidistant:c,base | file:<path>")


def _emit(element: NCElement, fmt: str):
    if fmt == "latex":
        print(element.latex("S"))
    else:
        print(json.dumps(element.to_json("S"), indent=2))


def cmd_expand(args) -> int:
    fmt = args.format
    picked = [
        x
        for x in (args.s, args.lam, args.psi, args.ribbon)
        if x is not None
    ]
    if len(picked) != 1:
        raise _usage("expand needs exactly one of --s, --lambda, --psi, --ribbon")
    if args.s is not None:
        out = shift_S(args.s, args.shift)
    elif args.lam is not None:
        out = shift_Lambda(args.lam, args.shift)
    elif args.psi is not None:
        from .families import psi_shifted

        out = psi_shifted(args.psi, args.shift)
    else:
        comp = _parse_comp(args.ribbon)
        if args.shifts:
            shifts = tuple(int(s) for s in args.shifts.split(","))
            out = ribbon_shifted(comp, shifts)
        else:
            out = ribbon_shifted(
                comp, tuple(x + args.shift for x in comp.row_shifts())
            )
    _emit(out, fmt)
    return 0


def _load_element(path: str | None):
    fh = sys.stdin if path in (None, "-") else open(path)
    data = json.load(fh)
    if fh is not sys.stdin:
        fh.close()
    basis = data.get("basis", "S")
    if basis == "R":
        return basis, RibbonElement.from_json(data)
    return basis, NCElement.from_json(data)


def _to_s_basis(basis: str, element) -> NCElement:
    if basis == "S":
        return element
    if basis == "R":
        return from_ribbon_basis(element)
    if basis == "L":
        return lambda_words_to_s(element)
    if basis == "Psi":
        return psi_words_to_s(element)
    raise _usage(f"unknown source basis {basis!r}")


def cmd_convert(args) -> int:
    basis, element = _load_element(args.input)
    x = _to_s_basis(basis, element)
    target = args.to
    if target == "S":
        out, out_basis = x, "S"
    elif target == "L":
        out, out_basis = s_to_lambda(x), "L"
    elif target == "Psi":
        out, out_basis = s_to_psi(x), "Psi"
    elif target == "R":
        out, out_basis = to_ribbon_basis(x), "R"
    else:
        raise _usage("--to must be one of S, L, Psi, R")
    if args.format == "latex":
        letter = {"S": "S", "L": "\\Lambda", "Psi": "\\Psi"}.get(out_basis)
        print(out.latex() if out_basis == "R" else out.latex(letter))
        return 0
    payload = out.to_json() if out_basis == "R" else out.to_json(out_basis)
    if args.params is not None and out_basis == "R":
        sub = _parse_params(args.params)
        if sub.kind != "symbolic" and sub.is_whole_distant():
            payload["whole_distant"] = True
            payload["integer_coefficients"] = out.integer_coefficients(sub)
    print(json.dumps(payload, indent=2))
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise _usage(
                f"unknown suite {name!r}; available: {', '.join(SUITES)} or 'all'"
            )
    reports = [run_suite(name, degree=args.degree, seed=args.seed) for name in names]
    payload = [r.to_json() for r in reports]
    print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    return 0 if all(r.passed for r in reports) else 1


def cmd_specialize(args) -> int:
    with open(args.assignment) as fh:
        assignment = VariableAssignment.from_json(json.load(fh))
    if args.shift:
        assignment = assignment.shift_all(args.shift)
    value = spec_value(args.family, args.k, assignment)
    print(json.dumps({"family": args.family, "k": args.k, "value": value.to_json()}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ncshift",
        description="exact calculus of noncommutative shifted symmetric functions",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("expand", help="expand a generator or ribbon in the S-basis")
    pe.add_argument("--s", type=int, help="complete homogeneous generator degree")
    pe.add_argument("--lambda", dest="lam", type=int, help="elementary generator degree")
    pe.add_argument("--psi", type=int, help="power sum degree")
    pe.add_argument("--ribbon", help="comma-separated composition")
    pe.add_argument("--shift", type=int, default=0, help="uniform shift tag")
    pe.add_argument("--shifts", help="comma-separated per-row ribbon shifts")
    pe.add_argument("--format", choices=("json", "latex"), default="json")
    pe.set_defaults(func=cmd_expand)

    pc = sub.add_parser("convert", help="convert between generating sets")
    pc.add_argument("--to", required=True, choices=("S", "L", "Psi", "R"))
    pc.add_argument("--input", help="JSON element file (default: stdin)")
    pc.add_argument("--params", help="symbolic | equidistant:c,base | file:<path>")
    pc.add_argument("--format", choices=("json", "latex"), default="json")
    pc.set_defaults(func=cmd_convert)

    pv = sub.add_parser("verify", help="run a named identity suite")
    pv.add_argument("suite", help=f"one of {', '.join(SUITES)} or 'all'")
    pv.add_argument("--degree", type=int, default=None, help="degree bound")
    pv.add_argument("--seed", type=int, default=0)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("specialize", help="evaluate at a variable-assignment file")
    ps.add_argument("--family", choices=("S", "L"), required=True)
    ps.add_argument("--k", type=int, required=True)
    ps.add_argument("--assignment", required=True, help="assignment JSON file")
    ps.add_argument("--shift", type=int, default=0, help="variable shift psi^[s]")
    ps.set_defaults(func=cmd_specialize)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
