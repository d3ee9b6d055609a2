"""Two-dimensional sanity checks: hyperbolic triangle reflection groups.

For the (p,q,r) triangle group the subdiagram-sum Euler characteristic must
match the classical closed form -(1/2)(1 - 1/p - 1/q - 1/r), and the
Gauss-Bonnet volume -2 pi chi must equal the angle defect
pi (1 - 1/p - 1/q - 1/r).  This exercises the general bond orders m >= 5
that never occur in integral lattices.
"""

from fractions import Fraction

from coxvol import CoxeterDiagram, hyperbolic_volume, orbifold_euler_characteristic

TRIPLES = [(2, 3, 7), (2, 4, 5), (3, 3, 4), (4, 4, 4), (2, 3, 11), (7, 7, 7)]

print(f"{'(p,q,r)':>10}  {'chi':>8}  {'volume':>22}  closed form")
for p, q, r in TRIPLES:
    diagram = CoxeterDiagram.from_bond_spec(
        [1, 1, 1], {(0, 1): p, (1, 2): q, (0, 2): r}
    )
    chi = orbifold_euler_characteristic(diagram)
    expected = -(1 - Fraction(1, p) - Fraction(1, q) - Fraction(1, r)) / 2
    assert chi == expected, (p, q, r)
    inv = hyperbolic_volume(chi, 2)
    print(
        f"{str((p, q, r)):>10}  {str(chi):>8}  {inv.volume_numeric:>22}"
        f"  {inv.volume_coefficient} * pi"
    )

print("\nthe (2,3,7) group tiles the plane with the smallest hyperbolic orbifold:")
smallest = orbifold_euler_characteristic(
    CoxeterDiagram.from_bond_spec([1, 1, 1], {(0, 1): 2, (1, 2): 3, (0, 2): 7})
)
print(f"  chi = {smallest}, area = pi/42")
