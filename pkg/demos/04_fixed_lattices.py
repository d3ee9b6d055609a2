"""From the Eisenstein Hermitian lattice to the five quadratic forms.

The lattice is E^{4,1} over Z[w], w a primitive cube root of unity, with
h(x,y) = -x0 conj(y0) + x1 conj(y1) + ... + x4 conj(y4).  An anti-involution
conjugates every coordinate and flips j of the signs.  Its fixed vectors
form a Z-lattice: coordinates with sign +1 keep integer entries, while
coordinates with sign -1 keep multiples of theta = w - conj(w).  Since
theta conj(theta) = 3, restricting h produces diag(-1, m1..m4) with j
threes.
"""

from coxvol import signature
from coxvol.eisenstein import (
    THETA,
    anti_involution_classes,
    fixed_lattice_basis,
    fixed_lattice_form,
    hermitian_inner,
)

print(f"theta = {THETA}, theta * conj(theta) = {THETA * THETA.conjugate()}\n")

for j, chi in enumerate(anti_involution_classes()):
    signs = " ".join(f"{e:+d}" for e in chi.epsilons)
    form = fixed_lattice_form(chi)
    basis = fixed_lattice_basis(chi)
    print(f"class {j}: signs ({signs})")
    print(f"  fixed-lattice basis entries: {[str(next(z for z in b if not z.is_zero())) for b in basis]}")
    print(f"  quadratic form: diag{form.diagonal_entries()}  signature {signature(form)}")
    # the basis really is fixed pointwise
    assert all(chi.apply(b) == b for b in basis)
    # and h is integral on it
    assert all(hermitian_inner(b, b).b == 0 for b in basis)
print("\neach fixed lattice is hyperbolic of rank 5; exactly j entries equal 3")
