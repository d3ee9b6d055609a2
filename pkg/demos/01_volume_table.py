"""The five components of the moduli space of smooth real cubic surfaces.

Each component is a quotient of real hyperbolic 4-space by the projective
orthogonal group of an integral quadratic form diag(-1, m1..m4) in which j
of the m_i equal 3.  This script derives the forms, builds a fundamental
chamber for each reflection group, and converts orbifold Euler
characteristics into hyperbolic volumes.  The five volumes sum to
37 pi^2 / 1080.
"""

from coxvol.report import RunConfig, render_text, table

reports, totals = table(RunConfig())

print(render_text(reports, totals))

print("checks:")
print(f"  total chi           = {totals.chi}  (expected 37/1440)")
print(f"  total volume        = {totals.volume_coefficient} * pi^2")
print(f"  total volume approx = {totals.volume_numeric}")
share = max(reports, key=lambda r: r.fraction_of_total)
print(
    f"  largest component   = type {share.j} ({share.topology}), "
    f"{share.fraction_percent}% of the total"
)
few = min(reports, key=lambda r: r.fraction_of_total)
print(
    f"  smallest component  = type {few.j} with {few.real_lines} real lines, "
    f"{few.fraction_percent}%"
)
