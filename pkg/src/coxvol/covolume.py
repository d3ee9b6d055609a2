"""Orbifold Euler characteristics of Coxeter chambers and hyperbolic volumes.

The Euler characteristic of the quotient of hyperbolic n-space by the
reflection group of a finite-volume Coxeter polyhedron is the alternating
sum over elliptic subdiagrams S (faces of the polyhedron) of
(-1)^|S| / |W_S|, with the empty set contributing +1.  In even dimension
the generalized Gauss-Bonnet theorem converts it to volume:

    n = 4:  volume = (4 pi^2 / 3) * chi     (ratio of the volume of the unit
            4-sphere to its Euler characteristic)
    n = 2:  volume = -2 pi * chi
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction

from .coxeter import CoxeterDiagram, finite_group_order

# pi to 110 significant digits; enough guard for any precision this module allows
PI_110 = (
    "3."
    "1415926535897932384626433832795028841971693993751"
    "0582097494459230781640628620899862803482534211706798214808651"
)

MAX_PRECISION = 80


def pi_decimal(precision: int) -> Decimal:
    if not 1 <= precision <= MAX_PRECISION:
        raise ValueError(f"precision must be between 1 and {MAX_PRECISION}")
    ctx = Context(prec=precision + 10)
    return ctx.plus(Decimal(PI_110))


def orbifold_euler_characteristic(diagram: CoxeterDiagram) -> Fraction:
    """Alternating subdiagram sum: sum over elliptic S of (-1)^|S| / |W_S|."""
    total = Fraction(0)
    for mask in range(1 << diagram.node_count):
        sub = diagram.classify_mask(mask)
        if sub.kind != "elliptic":
            continue
        size = mask.bit_count()
        term = Fraction(1, finite_group_order(sub))
        total += -term if size % 2 else term
    return total


@dataclass(frozen=True)
class OrbifoldInvariants:
    """Exact Euler characteristic with the derived volume of the quotient."""

    euler: Fraction
    dimension: int
    volume_coefficient: Fraction  # of pi^2 in dimension 4, of pi in dimension 2
    volume_numeric: str  # decimal string with the requested significant digits

    def volume_decimal(self) -> Decimal:
        return Decimal(self.volume_numeric)


def _significant(value: Decimal, digits: int) -> str:
    ctx = Context(prec=digits)
    rounded = ctx.plus(value)
    return format(rounded, "f")


def hyperbolic_volume(euler, n: int, precision: int = 15) -> OrbifoldInvariants:
    """Volume of the quotient orbifold from its Euler characteristic (n = 2 or 4)."""
    euler = Fraction(euler)
    if precision < 15:
        raise ValueError("volumes carry at least 15 significant digits")
    pi = pi_decimal(precision)
    ctx = Context(prec=precision + 10)
    if n == 4:
        coeff = Fraction(4, 3) * euler
        scale = ctx.multiply(pi, pi)
    elif n == 2:
        coeff = Fraction(-2) * euler
        scale = pi
    else:
        raise ValueError("only even dimensions 2 and 4 are supported")
    value = ctx.divide(
        ctx.multiply(Decimal(coeff.numerator), scale), Decimal(coeff.denominator)
    )
    return OrbifoldInvariants(euler, n, coeff, _significant(value, precision))


def quotient_invariants(w_euler, automorphism_order: int) -> Fraction:
    """Euler characteristic after extending the reflection group by diagram symmetries.

    The extended group contains the reflection group with index equal to the
    automorphism order, so chi divides accordingly.
    """
    if automorphism_order <= 0:
        raise ValueError("automorphism order must be positive")
    return Fraction(w_euler) / automorphism_order
