"""coxvol: exact Coxeter chambers and hyperbolic covolumes of integral lattices.

The package derives, from first principles, the decomposition of the moduli
space of stable real cubic surfaces into five arithmetic pieces: quadratic
forms from the Eisenstein lattice's anti-involutions, fundamental chambers
from the reflection algorithm, and volumes from orbifold Euler
characteristics via Gauss-Bonnet.  All decision arithmetic is exact.
"""

from .coxeter import (
    BondLabel,
    CoxeterDiagram,
    NonCrystallographicAngleError,
    SubdiagramClass,
    build_diagram,
    classify_subdiagram,
    diagram_automorphism_order,
    finite_group_order,
    finite_volume_check,
)
from .covolume import (
    OrbifoldInvariants,
    hyperbolic_volume,
    orbifold_euler_characteristic,
    quotient_invariants,
)
from .eisenstein import (
    AntiInvolution,
    EisensteinInt,
    HermitianLattice,
    anti_involution_classes,
    fixed_lattice_basis,
    fixed_lattice_form,
    hermitian_inner,
)
from .forms import (
    DegenerateFormError,
    QuadraticForm,
    Signature,
    candidate_root_norms,
    discriminant_exponent,
    format_form_text,
    parse_form_text,
    signature,
    smith_invariant_factors,
)
from .quadring import (
    QuadRingElement,
    QuadRingForm,
    conjugate_signature_pair,
    nonarithmeticity_witness,
)
from .report import ComponentReport, RunConfig, TableTotals, report_serialize, table
from .roots import (
    Root,
    VinbergIncompleteError,
    VinbergState,
    enumerate_roots,
    initial_chamber,
    is_root,
    reflect,
    run_vinberg,
)

__version__ = "0.1.0"

__all__ = [
    "AntiInvolution",
    "BondLabel",
    "ComponentReport",
    "CoxeterDiagram",
    "DegenerateFormError",
    "EisensteinInt",
    "HermitianLattice",
    "NonCrystallographicAngleError",
    "OrbifoldInvariants",
    "QuadRingElement",
    "QuadRingForm",
    "QuadraticForm",
    "Root",
    "RunConfig",
    "Signature",
    "SubdiagramClass",
    "TableTotals",
    "VinbergIncompleteError",
    "VinbergState",
    "anti_involution_classes",
    "build_diagram",
    "candidate_root_norms",
    "classify_subdiagram",
    "conjugate_signature_pair",
    "diagram_automorphism_order",
    "discriminant_exponent",
    "enumerate_roots",
    "finite_group_order",
    "finite_volume_check",
    "fixed_lattice_basis",
    "fixed_lattice_form",
    "format_form_text",
    "hermitian_inner",
    "hyperbolic_volume",
    "initial_chamber",
    "is_root",
    "nonarithmeticity_witness",
    "orbifold_euler_characteristic",
    "parse_form_text",
    "quotient_invariants",
    "reflect",
    "report_serialize",
    "run_vinberg",
    "signature",
    "smith_invariant_factors",
    "table",
]
