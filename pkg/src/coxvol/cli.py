"""Command line interface.

Subcommands:
    table           reproduce the five-component volume table
    vinberg         run the chamber algorithm on one form
    euler           Euler characteristic and volume of one form or diagram
    fixed-lattice   the five anti-involutions and their fixed quadratic forms
    galois          conjugate signatures and the nonarithmeticity witness
    diagram-export  Graphviz export of a chamber diagram

Exit codes: 0 success, 2 usage error, 3 enumeration limits exhausted,
4 mathematical validity failure, 5 I/O or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report
from .coxeter import (
    CoxeterDiagram,
    NonCrystallographicAngleError,
    diagram_automorphism_order,
)
from .covolume import hyperbolic_volume, orbifold_euler_characteristic, quotient_invariants
from .eisenstein import anti_involution_classes, fixed_lattice_form
from .forms import (
    DegenerateFormError,
    QuadraticForm,
    format_form_text,
    parse_form_text,
)
from .quadring import (
    QuadRingForm,
    conjugate_signature_pair,
    nonarithmeticity_witness,
    parse_quadring_entry,
    parse_quadring_form_text,
)
from .roots import VinbergIncompleteError, run_vinberg

EXIT_OK = 0
EXIT_LIMITS = 3
EXIT_MATH = 4
EXIT_IO = 5


def _load_form(args) -> QuadraticForm:
    if args.diag:
        return QuadraticForm.diagonal(int(tok) for tok in args.diag.split(","))
    if args.form:
        with open(args.form, encoding="utf-8") as fh:
            return parse_form_text(fh.read())
    raise ValueError("give a form with --diag or --form")


def _load_quadring_form(args) -> QuadRingForm:
    if args.diag:
        return QuadRingForm.diagonal(
            parse_quadring_entry(tok) for tok in args.diag.split(",")
        )
    if args.form:
        with open(args.form, encoding="utf-8") as fh:
            return parse_quadring_form_text(fh.read())
    raise ValueError("give a form with --diag or --form")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _cmd_table(args) -> int:
    config = report.RunConfig(
        max_height=args.max_height, max_roots=args.max_roots, precision=args.precision
    )
    reports, totals = report.table(config)
    _emit(args, report.report_serialize(reports, totals, args.format).decode("utf-8"))
    return EXIT_OK


def _run_state(args):
    form = _load_form(args)
    return form, run_vinberg(form, max_height=args.max_height, max_roots=args.max_roots)


def _cmd_vinberg(args) -> int:
    form, state = _run_state(args)
    if args.format == "json":
        doc = {
            "form": [list(row) for row in form.gram],
            "controlling_vector": list(state.controlling_vector),
            "roots": [
                {
                    "vector": list(r.vector),
                    "norm": r.norm,
                    "height": _frac(r.height),
                }
                for r in state.accepted
            ],
            "complete": state.complete,
        }
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        lines = [
            f"root ({', '.join(map(str, r.vector))}) norm={r.norm} height={_frac(r.height)}"
            for r in state.accepted
        ]
        lines.append(f"facets: {len(state.accepted)}  complete: {state.complete}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_euler(args) -> int:
    if args.diagram:
        with open(args.diagram, encoding="utf-8") as fh:
            diagram = CoxeterDiagram.from_text(fh.read())
        dimension = args.dim
    else:
        form, state = _run_state(args)
        diagram = state.diagram()
        dimension = form.dim - 1
    chi_w = orbifold_euler_characteristic(diagram)
    aut = diagram_automorphism_order(diagram)
    chi_q = quotient_invariants(chi_w, aut)
    inv = hyperbolic_volume(chi_q, dimension, args.precision)
    power = "pi^2" if dimension == 4 else "pi"
    lines = [
        f"chi_reflection: {_frac(chi_w)}",
        f"automorphisms: {aut}",
        f"chi: {_frac(chi_q)}",
        f"volume: {_frac(inv.volume_coefficient)}*{power} = {inv.volume_numeric}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_fixed_lattice(args) -> int:
    blocks = []
    for j, chi in enumerate(anti_involution_classes()):
        signs = " ".join(f"{e:+d}" for e in chi.epsilons)
        form = fixed_lattice_form(chi)
        blocks.append(f"# class {j}: signs {signs}\n{format_form_text(form)}")
    _emit(args, "\n".join(blocks))
    return EXIT_OK


def _cmd_galois(args) -> int:
    form = _load_quadring_form(args)
    first, second = conjugate_signature_pair(form)
    witness = nonarithmeticity_witness(form) if form.dim == 5 else None
    lines = [
        f"signature: {first}",
        f"conjugate signature: {second}",
    ]
    if witness is not None:
        lines.append(f"nonarithmeticity witness: {'true' if witness else 'false'}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_diagram_export(args) -> int:
    if args.diagram:
        with open(args.diagram, encoding="utf-8") as fh:
            diagram = CoxeterDiagram.from_text(fh.read())
    else:
        _, state = _run_state(args)
        diagram = state.diagram()
    _emit(args, diagram.to_dot())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxvol",
        description="Exact Coxeter chambers, Euler characteristics and hyperbolic volumes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_form_args(p):
        p.add_argument("--diag", help="comma-separated diagonal entries, e.g. -1,3,3,1,1")
        p.add_argument("--form", help="path to a form file (dim n / diag ... or Gram rows)")

    def add_common(p):
        p.add_argument("--max-height", type=int, default=100)
        p.add_argument("--max-roots", type=int, default=50)
        p.add_argument("--precision", type=int, default=15)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("table", help="reproduce the five-component volume table")
    add_common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("vinberg", help="run the chamber algorithm on one form")
    add_form_args(p)
    add_common(p)
    p.set_defaults(func=_cmd_vinberg)

    p = sub.add_parser("euler", help="Euler characteristic and volume")
    add_form_args(p)
    p.add_argument("--diagram", help="path to a diagram file instead of a form")
    p.add_argument("--dim", type=int, default=4, help="dimension for a diagram input")
    add_common(p)
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("fixed-lattice", help="anti-involutions and fixed forms")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_fixed_lattice)

    p = sub.add_parser("galois", help="conjugate signatures over Z[sqrt(3)]")
    p.add_argument("--diag", help="entries like -1,0+1*r3,1,1,1")
    p.add_argument("--form", help="path to a form file with r3 entries")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_galois)

    p = sub.add_parser("diagram-export", help="Graphviz export of a diagram")
    add_form_args(p)
    p.add_argument("--diagram", help="path to a diagram file instead of a form")
    add_common(p)
    p.set_defaults(func=_cmd_diagram_export)

    return parser


def _merge_dash_values(argv: list[str]) -> list[str]:
    """Let `--diag -1,3,3,1,1` work: argparse would read the value as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--diag" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"--diag={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_dash_values(list(argv)))
    try:
        return args.func(args)
    except VinbergIncompleteError as exc:
        print(f"error: {exc} ({len(exc.state.accepted)} roots adopted)", file=sys.stderr)
        return EXIT_LIMITS
    except (DegenerateFormError, NonCrystallographicAngleError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
