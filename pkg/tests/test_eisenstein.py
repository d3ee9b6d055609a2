import random

import pytest

from coxvol.eisenstein import (
    OMEGA,
    ONE,
    THETA,
    ZERO,
    AntiInvolution,
    E41,
    EisensteinInt,
    anti_involution_classes,
    fixed_lattice_basis,
    fixed_lattice_form,
    hermitian_inner,
)
from coxvol.forms import QuadraticForm, Signature, signature


def _random_eis(rng):
    return EisensteinInt(rng.randrange(-5, 6), rng.randrange(-5, 6))


def _random_vector(rng):
    return tuple(_random_eis(rng) for _ in range(5))


def test_omega_is_primitive_cube_root():
    assert OMEGA * OMEGA + OMEGA + ONE == ZERO
    assert OMEGA * OMEGA * OMEGA == ONE


def test_conjugation_formula():
    rng = random.Random(3)
    for _ in range(50):
        z = _random_eis(rng)
        assert z.conjugate() == EisensteinInt(z.a - z.b, -z.b)
        assert z.conjugate().conjugate() == z


def test_norm_is_multiplicative_and_nonnegative():
    rng = random.Random(4)
    for _ in range(100):
        z, w = _random_eis(rng), _random_eis(rng)
        assert (z * w).norm() == z.norm() * w.norm()
        assert z.norm() >= 0


def test_theta_value():
    assert THETA == EisensteinInt(1, 2)
    assert THETA * THETA.conjugate() == EisensteinInt(3, 0)


def test_inner_basis_cases():
    e = E41.basis()
    assert hermitian_inner(e[0], e[0]) == EisensteinInt(-1, 0)
    assert hermitian_inner(e[1], e[1]) == ONE
    assert hermitian_inner(e[1], e[2]) == ZERO
    omega_vec = (ZERO, OMEGA, ZERO, ZERO, ZERO)
    assert hermitian_inner(omega_vec, omega_vec) == ONE


def test_inner_hermitian_symmetry():
    rng = random.Random(9)
    for _ in range(50):
        x, y = _random_vector(rng), _random_vector(rng)
        assert hermitian_inner(x, y) == hermitian_inner(y, x).conjugate()


def test_inner_self_value_is_rational_integer():
    rng = random.Random(10)
    for _ in range(100):
        x = _random_vector(rng)
        assert hermitian_inner(x, x).b == 0


def test_inner_length_mismatch():
    with pytest.raises(ValueError):
        hermitian_inner((ZERO,) * 4, (ZERO,) * 5)


def test_five_classes_with_canonical_tails():
    classes = anti_involution_classes()
    assert len(classes) == 5
    for j, chi in enumerate(classes):
        assert chi.j == j
        assert chi.epsilons[0] == 1
        assert chi.epsilons == (1,) + (1,) * (4 - j) + (-1,) * j


def test_classes_are_involutions():
    rng = random.Random(12)
    for chi in anti_involution_classes():
        for _ in range(20):
            v = _random_vector(rng)
            assert chi.apply(chi.apply(v)) == v


def test_anti_involution_validation():
    with pytest.raises(ValueError):
        AntiInvolution((-1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        AntiInvolution((1, 1, 1, 1))


def test_fixed_basis_is_pointwise_fixed():
    for chi in anti_involution_classes():
        for b in fixed_lattice_basis(chi):
            assert chi.apply(b) == b


def test_fixed_lattice_forms_are_the_diagonal_family():
    expected = [
        QuadraticForm.diagonal([-1, 1, 1, 1, 1]),
        QuadraticForm.diagonal([-1, 1, 1, 1, 3]),
        QuadraticForm.diagonal([-1, 1, 1, 3, 3]),
        QuadraticForm.diagonal([-1, 1, 3, 3, 3]),
        QuadraticForm.diagonal([-1, 3, 3, 3, 3]),
    ]
    for j, chi in enumerate(anti_involution_classes()):
        form = fixed_lattice_form(chi)
        assert form == expected[j]
        diag = form.diagonal_entries()
        assert diag[0] == -1
        assert sorted(diag[1:]).count(3) == j


def test_fixed_lattice_forms_have_hyperbolic_signature_and_full_rank():
    for chi in anti_involution_classes():
        form = fixed_lattice_form(chi)
        assert form.dim == 5
        assert signature(form) == Signature(4, 1)
        assert form.determinant != 0
