"""Step through the chamber algorithm on the odd unimodular lattice of
signature (4,1).

The controlling vector is e0 with Q(e0) = -1.  First come the simple roots
of the finite root system orthogonal to e0 (a B4 system: 8 short and 24
long roots).  Candidate mirrors are then examined in order of increasing
height B(r, e0)^2 / Q(r); a mirror joins the chamber when it makes
nonpositive inner products with everything already accepted.  The run stops
as soon as the diagram passes the finite-volume test.
"""

from coxvol import (
    QuadraticForm,
    candidate_root_norms,
    enumerate_roots,
    finite_volume_check,
    initial_chamber,
    orbifold_euler_characteristic,
    run_vinberg,
)

form = QuadraticForm.diagonal([-1, 1, 1, 1, 1])
e0 = (1, 0, 0, 0, 0)

print(f"form: diag{form.diagonal_entries()}, admissible root norms {candidate_root_norms(form)}")

orthogonal = {k: len(enumerate_roots(form, e0, k, 0)) for k in candidate_root_norms(form)}
print(f"roots orthogonal to e0 by norm: {orthogonal}")

simple = initial_chamber(form, e0)
print("simple roots of the orthogonal system:")
for r in simple:
    print(f"  {r.vector}  norm {r.norm}")

state = run_vinberg(form)
print("\naccepted mirrors in height order:")
for r in state.accepted:
    print(f"  {r.vector}  norm {r.norm}  height {r.height}")

diagram = state.diagram()
print("\nchamber diagram:")
print(diagram.to_text())
print(f"finite volume: {finite_volume_check(diagram, 4)}")
print(f"orbifold Euler characteristic: {orbifold_euler_characteristic(diagram)}")
print("volume = (4 pi^2 / 3) * chi = pi^2 / 1440")
