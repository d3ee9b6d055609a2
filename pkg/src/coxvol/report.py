"""The five-component volume table: pipeline, report records and serialization.

For each component j = 0..4 the pipeline derives the quadratic form from the
j-th anti-involution of the Eisenstein lattice, builds the fundamental
chamber, classifies its diagram, and converts the Euler characteristic into
a hyperbolic volume.  Topology and real-line counts of the corresponding
real cubic surfaces are classical data and are embedded as constants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from decimal import Decimal, ROUND_HALF_UP
from fractions import Fraction

from .coxeter import diagram_automorphism_order
from .covolume import hyperbolic_volume, orbifold_euler_characteristic, quotient_invariants
from .eisenstein import anti_involution_classes, fixed_lattice_form
from .roots import run_vinberg

TOPOLOGY = (
    "RP^2 + 3 handles",
    "RP^2 + 2 handles",
    "RP^2 + 1 handle",
    "RP^2",
    "RP^2 u S^2",
)
REAL_LINES = (27, 15, 7, 3, 3)
# orbifold fundamental groups of the smooth loci, where printable
PI1_ORB = ("S_5", "(S_3 x S_3) : Z/2", "(D_inf x D_inf) : Z/2", None, None)


@dataclass(frozen=True)
class RunConfig:
    max_height: int = 100
    max_roots: int = 50
    precision: int = 15

    def __post_init__(self):
        if self.max_height <= 0 or self.max_roots <= 0:
            raise ValueError("limits must be positive")


@dataclass(frozen=True)
class ComponentReport:
    j: int
    form_diagonal: tuple[int, ...]
    facet_count: int
    diagram_text: str
    chi_reflection: Fraction  # chi of the reflection-group quotient
    automorphism_order: int
    chi_quotient: Fraction  # chi after dividing by the diagram symmetries
    volume_coefficient: Fraction  # multiple of pi^2
    volume_numeric: str
    fraction_of_total: Fraction
    fraction_percent: str
    topology: str
    real_lines: int
    pi1_orb: str | None


@dataclass(frozen=True)
class TableTotals:
    chi: Fraction
    volume_coefficient: Fraction
    volume_numeric: str
    fraction_percent: str
    precision: int  # significant digits carried by every volume_numeric field


def _percent(fraction: Fraction) -> str:
    value = Decimal(fraction.numerator * 100) / Decimal(fraction.denominator)
    return str(value.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _five_places(numeric: str) -> str:
    return str(Decimal(numeric).quantize(Decimal("0.00001"), rounding=ROUND_HALF_UP))


def component_report(j: int, config: RunConfig | None = None) -> ComponentReport:
    """Run the full pipeline for one component (fraction fields filled by table())."""
    config = config or RunConfig()
    chi_j = anti_involution_classes()[j]
    form = fixed_lattice_form(chi_j)
    diag = form.diagonal_entries()
    if sorted(diag[1:]) != [1] * (4 - j) + [3] * j or diag[0] != -1:
        raise AssertionError(f"fixed lattice of class {j} has unexpected form {diag}")
    state = run_vinberg(form, max_height=config.max_height, max_roots=config.max_roots)
    diagram = state.diagram()
    chi_w = orbifold_euler_characteristic(diagram)
    aut = diagram_automorphism_order(diagram)
    chi_q = quotient_invariants(chi_w, aut)
    inv = hyperbolic_volume(chi_q, 4, config.precision)
    return ComponentReport(
        j=j,
        form_diagonal=diag,
        facet_count=len(state.accepted),
        diagram_text=diagram.to_text(),
        chi_reflection=chi_w,
        automorphism_order=aut,
        chi_quotient=chi_q,
        volume_coefficient=inv.volume_coefficient,
        volume_numeric=inv.volume_numeric,
        fraction_of_total=Fraction(0),
        fraction_percent="",
        topology=TOPOLOGY[j],
        real_lines=REAL_LINES[j],
        pi1_orb=PI1_ORB[j],
    )


def table(config: RunConfig | None = None) -> tuple[list[ComponentReport], TableTotals]:
    """All five component reports plus totals; fractions are exact chi ratios."""
    config = config or RunConfig()
    reports = [component_report(j, config) for j in range(5)]
    total_chi = sum((r.chi_quotient for r in reports), Fraction(0))
    total_inv = hyperbolic_volume(total_chi, 4, config.precision)
    filled = []
    for r in reports:
        frac = r.chi_quotient / total_chi
        filled.append(
            replace(r, fraction_of_total=frac, fraction_percent=_percent(frac))
        )
    totals = TableTotals(
        chi=total_chi,
        volume_coefficient=total_inv.volume_coefficient,
        volume_numeric=total_inv.volume_numeric,
        fraction_percent="100.00",
        precision=config.precision,
    )
    return filled, totals


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _parse_frac(s: str) -> Fraction:
    return Fraction(s)


def render_text(reports, totals) -> str:
    """Aligned table in the layout of the classical presentation, then details."""
    headers = (
        "type", "topology", "lines", "pi1_orb",
        "euler", "volume", "fraction",
    )
    rows = []
    for r in reports:
        rows.append((
            str(r.j),
            r.topology,
            str(r.real_lines),
            r.pi1_orb or "-",
            _frac_str(r.chi_quotient),
            _five_places(r.volume_numeric),
            f"{r.fraction_percent}%",
        ))
    totals_row = (
        "total", "", "", "",
        _frac_str(totals.chi),
        _five_places(totals.volume_numeric),
        f"{totals.fraction_percent}%",
    )
    widths = [
        max(len(headers[c]), *(len(row[c]) for row in rows + [totals_row]))
        for c in range(len(headers))
    ]

    def fmt(row):
        return "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()

    lines = [fmt(headers), fmt(tuple("-" * w for w in widths))]
    lines.extend(fmt(row) for row in rows)
    lines.append(fmt(totals_row))
    lines.append("")
    for r in reports:
        lines.append(
            f"component {r.j}: form diag({','.join(map(str, r.form_diagonal))})"
            f"  facets={r.facet_count}"
            f"  chi_reflection={_frac_str(r.chi_reflection)}"
            f"  automorphisms={r.automorphism_order}"
            f"  chi={_frac_str(r.chi_quotient)}"
            f"  volume={_frac_str(r.volume_coefficient)}*pi^2"
            f" = {r.volume_numeric}"
        )
        for line in r.diagram_text.rstrip("\n").splitlines():
            lines.append(f"    {line}")
    return "\n".join(lines) + "\n"


def _report_to_dict(r: ComponentReport) -> dict:
    return {
        "j": r.j,
        "form_diagonal": list(r.form_diagonal),
        "facet_count": r.facet_count,
        "diagram": r.diagram_text,
        "chi_reflection": _frac_str(r.chi_reflection),
        "automorphism_order": r.automorphism_order,
        "chi": _frac_str(r.chi_quotient),
        "volume_coefficient_pi2": _frac_str(r.volume_coefficient),
        "volume_numeric": r.volume_numeric,
        "fraction_of_total": _frac_str(r.fraction_of_total),
        "fraction_percent": r.fraction_percent,
        "topology": r.topology,
        "real_lines": r.real_lines,
        "pi1_orb": r.pi1_orb,
    }


def _report_from_dict(d: dict) -> ComponentReport:
    return ComponentReport(
        j=d["j"],
        form_diagonal=tuple(d["form_diagonal"]),
        facet_count=d["facet_count"],
        diagram_text=d["diagram"],
        chi_reflection=_parse_frac(d["chi_reflection"]),
        automorphism_order=d["automorphism_order"],
        chi_quotient=_parse_frac(d["chi"]),
        volume_coefficient=_parse_frac(d["volume_coefficient_pi2"]),
        volume_numeric=d["volume_numeric"],
        fraction_of_total=_parse_frac(d["fraction_of_total"]),
        fraction_percent=d["fraction_percent"],
        topology=d["topology"],
        real_lines=d["real_lines"],
        pi1_orb=d["pi1_orb"],
    )


def render_structured(reports, totals) -> str:
    doc = {
        "components": [_report_to_dict(r) for r in reports],
        "precision": totals.precision,
        "totals": {
            "chi": _frac_str(totals.chi),
            "volume_coefficient_pi2": _frac_str(totals.volume_coefficient),
            "volume_numeric": totals.volume_numeric,
            "fraction_percent": totals.fraction_percent,
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_structured(text: str) -> tuple[list[ComponentReport], TableTotals]:
    doc = json.loads(text)
    reports = [_report_from_dict(d) for d in doc["components"]]
    t = doc["totals"]
    totals = TableTotals(
        chi=_parse_frac(t["chi"]),
        volume_coefficient=_parse_frac(t["volume_coefficient_pi2"]),
        volume_numeric=t["volume_numeric"],
        fraction_percent=t["fraction_percent"],
        precision=doc["precision"],
    )
    return reports, totals


def report_serialize(reports, totals, fmt: str) -> bytes:
    """Byte stream of the table; fmt is 'text' or 'json'."""
    if fmt == "text":
        return render_text(reports, totals).encode("utf-8")
    if fmt == "json":
        return render_structured(reports, totals).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
