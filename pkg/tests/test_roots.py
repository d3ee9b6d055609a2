import random
from fractions import Fraction

import pytest

from coxvol.forms import QuadraticForm, candidate_root_norms
from coxvol.roots import (
    Root,
    VinbergIncompleteError,
    enumerate_roots,
    initial_chamber,
    is_root,
    reflect,
    run_vinberg,
)
from helpers import brute_force_roots

UNIMODULAR = QuadraticForm.diagonal([-1, 1, 1, 1, 1])
THREES = QuadraticForm.diagonal([-1, 3, 3, 3, 3])
E0 = (1, 0, 0, 0, 0)
FIVE_FORMS = [
    QuadraticForm.diagonal([-1] + [1] * (4 - j) + [3] * j) for j in range(5)
]


def test_is_root_examples():
    assert is_root(UNIMODULAR, (0, 1, 0, 0, 0), 1)
    assert is_root(UNIMODULAR, (0, 1, 1, 0, 0), 2)
    assert is_root(QuadraticForm.diagonal([-1, 3, 1, 1, 1]), (0, 1, 0, 0, 0), 3)


def test_is_root_rejects():
    assert not is_root(UNIMODULAR, (0, 2, 0, 0, 0), 4)  # imprimitive
    assert not is_root(UNIMODULAR, (0, 1, 0, 0, 0), 2)  # wrong norm
    # fails the divisibility test: Q = 3 but 2B(v, e1) = 2
    assert not is_root(QuadraticForm.diagonal([-1, 1, 1, 1, 1]), (0, 1, 1, 1, 0), 3)


def test_reflect_examples():
    e1 = Root((0, 1, 0, 0, 0), 1)
    assert reflect(UNIMODULAR, e1, (0, 0, 1, 0, 0)) == (0, 0, 1, 0, 0)
    assert reflect(UNIMODULAR, e1, (0, 1, 0, 0, 0)) == (0, -1, 0, 0, 0)
    swap = Root((0, 1, -1, 0, 0), 2)
    assert reflect(UNIMODULAR, swap, (0, 1, 0, 0, 0)) == (0, 0, 1, 0, 0)


def test_reflect_preserves_values():
    rng = random.Random(31)
    for form in FIVE_FORMS:
        roots = [r.as_root() for r in run_vinberg(form).accepted]
        for _ in range(1000):
            x = tuple(rng.randrange(-8, 9) for _ in range(form.dim))
            r = rng.choice(roots)
            y = reflect(form, r, x)
            assert all(isinstance(c, int) for c in y)
            assert form.value(y) == form.value(x)


def test_reflect_is_involutive():
    rng = random.Random(32)
    roots = [r.as_root() for r in run_vinberg(UNIMODULAR).accepted]
    for _ in range(100):
        x = tuple(rng.randrange(-5, 6) for _ in range(5))
        r = rng.choice(roots)
        assert reflect(UNIMODULAR, r, reflect(UNIMODULAR, r, x)) == x


def test_reflected_root_is_root():
    roots = [r.as_root() for r in run_vinberg(THREES).accepted]
    for r in roots:
        for s in roots:
            image = reflect(THREES, r, s.vector)
            assert is_root(THREES, image, s.norm)


@pytest.mark.parametrize("k,a", [(1, 0), (2, 0), (1, -1), (2, -1), (1, -2), (2, -2)])
def test_enumerate_matches_bruteforce_unimodular(k, a):
    got = [r.vector for r in enumerate_roots(UNIMODULAR, E0, k, a)]
    assert got == brute_force_roots(UNIMODULAR, E0, k, a, 4)


@pytest.mark.parametrize("k,a", [(1, 0), (2, 0), (3, 0), (6, 0), (2, -1), (3, -3), (6, -3)])
def test_enumerate_matches_bruteforce_mixed_form(k, a):
    form = QuadraticForm.diagonal([-1, 3, 3, 1, 1])
    got = [r.vector for r in enumerate_roots(form, E0, k, a)]
    assert got == brute_force_roots(form, E0, k, a, 4)


def test_enumerate_general_path_nondiagonal():
    # hyperbolic plane Gram [[0,1],[1,0]]: forces the shell-enumeration path
    form = QuadraticForm([[0, 1], [1, 0]])
    v0 = (1, -1)  # Q = -2
    got = [r.vector for r in enumerate_roots(form, v0, 2, 0)]
    assert got == brute_force_roots(form, v0, 2, 0, 3) == [(-1, -1), (1, 1)]


def test_enumerate_general_path_matches_fast_path():
    # same diagonal lattice, once with v0 = e0 (fast path) and once with a
    # generic controlling vector handled by the general path
    form = QuadraticForm.diagonal([-1, 1, 1, 1, 1])
    v0 = (2, 1, 0, 0, 0)  # Q = -3
    for k in (1, 2):
        for a in (0, -1, -2):
            got = [r.vector for r in enumerate_roots(form, v0, k, a)]
            assert got == brute_force_roots(form, v0, k, a, 5)


def test_enumerate_counts_frozen():
    assert len(enumerate_roots(UNIMODULAR, E0, 1, 0)) == 8
    assert len(enumerate_roots(UNIMODULAR, E0, 2, 0)) == 24
    assert len(enumerate_roots(UNIMODULAR, E0, 1, -1)) == 24


def test_enumerate_returns_sorted_roots():
    roots = enumerate_roots(UNIMODULAR, E0, 2, 0)
    vectors = [r.vector for r in roots]
    assert vectors == sorted(vectors)
    assert all(r.norm == 2 for r in roots)


def test_enumerate_requires_negative_controlling_norm():
    with pytest.raises(ValueError):
        enumerate_roots(UNIMODULAR, (0, 1, 0, 0, 0), 1, 0)


def test_initial_chamber_unimodular():
    simple = initial_chamber(UNIMODULAR, E0)
    assert [(r.vector, r.norm) for r in simple] == [
        ((0, 0, 0, 0, 1), 1),
        ((0, 0, 0, 1, -1), 2),
        ((0, 0, 1, -1, 0), 2),
        ((0, 1, -1, 0, 0), 2),
    ]
    # orthogonal system has 8 short and 24 long roots
    short = enumerate_roots(UNIMODULAR, E0, 1, 0)
    long = enumerate_roots(UNIMODULAR, E0, 2, 0)
    assert (len(short), len(long)) == (8, 24)
    for i, r in enumerate(simple):
        for s in simple[i + 1:]:
            assert UNIMODULAR.bilinear(r.vector, s.vector) <= 0


def test_initial_chamber_scaled_threes():
    simple = initial_chamber(THREES, E0)
    assert sorted(r.norm for r in simple) == [3, 6, 6, 6]


def test_initial_chamber_simple_roots_generate_all_positives():
    # every positive root of the orthogonal system is a nonnegative integer
    # combination reachable by adding one simple root at a time
    simple = {r.vector for r in initial_chamber(UNIMODULAR, E0)}
    positives = {
        r.vector
        for k in candidate_root_norms(UNIMODULAR)
        for r in enumerate_roots(UNIMODULAR, E0, k, 0)
        if next(c for c in r.vector if c != 0) > 0
    }
    reached = set(simple)
    grew = True
    while grew:
        grew = False
        for p in list(positives - reached):
            for s in simple:
                diff = tuple(a - b for a, b in zip(p, s))
                if diff in reached:
                    reached.add(p)
                    grew = True
                    break
    assert reached == positives


def test_initial_chamber_empty_when_no_orthogonal_roots():
    form = QuadraticForm([[0, 1], [1, 0]])
    assert initial_chamber(form, (2, -1)) == []


def test_run_vinberg_unimodular_frozen_state():
    state = run_vinberg(UNIMODULAR)
    assert state.complete
    assert [(r.vector, r.norm, r.height) for r in state.accepted] == [
        ((0, 0, 0, 0, 1), 1, Fraction(0)),
        ((0, 0, 0, 1, -1), 2, Fraction(0)),
        ((0, 0, 1, -1, 0), 2, Fraction(0)),
        ((0, 1, -1, 0, 0), 2, Fraction(0)),
        ((1, -1, -1, -1, 0), 2, Fraction(1, 2)),
    ]


def test_run_vinberg_threes_frozen_state():
    state = run_vinberg(THREES)
    assert state.complete
    assert [(r.vector, r.norm, r.height) for r in state.accepted] == [
        ((0, 0, 0, 0, 1), 3, Fraction(0)),
        ((0, 0, 0, 1, -1), 6, Fraction(0)),
        ((0, 0, 1, -1, 0), 6, Fraction(0)),
        ((0, 1, -1, 0, 0), 6, Fraction(0)),
        ((1, -1, 0, 0, 0), 2, Fraction(1, 2)),
        ((3, -1, -1, -1, -1), 3, Fraction(3)),
    ]


@pytest.mark.parametrize("j", range(5))
def test_run_vinberg_chamber_invariants(j):
    form = FIVE_FORMS[j]
    state = run_vinberg(form)
    assert state.complete
    vectors = [r.vector for r in state.accepted]
    norms = set(candidate_root_norms(form))
    for i, r in enumerate(state.accepted):
        assert r.norm in norms
        assert is_root(form, r.vector, r.norm)
        for s in state.accepted[i + 1:]:
            assert form.bilinear(r.vector, s.vector) <= 0
    # accepted heights are nondecreasing
    heights = [r.height for r in state.accepted]
    assert heights == sorted(heights)
    # accepted roots span the whole space
    from helpers import matrix_rank

    assert matrix_rank(vectors) == form.dim


def test_run_vinberg_is_deterministic():
    first = run_vinberg(FIVE_FORMS[2])
    second = run_vinberg(FIVE_FORMS[2])
    assert first.accepted == second.accepted
    assert first.frontier == second.frontier


def test_run_vinberg_zero_root_budget_fails():
    with pytest.raises(VinbergIncompleteError) as info:
        run_vinberg(UNIMODULAR, max_roots=0)
    assert info.value.state.accepted == () or not info.value.state.complete


def test_run_vinberg_height_budget_fails_with_partial_state():
    with pytest.raises(VinbergIncompleteError) as info:
        run_vinberg(THREES, max_height=Fraction(1, 4))
    state = info.value.state
    assert not state.complete
    assert len(state.accepted) == 4  # the orthogonal simple roots survive


def test_run_vinberg_rejects_wrong_signature():
    with pytest.raises(ValueError):
        run_vinberg(QuadraticForm.diagonal([1, 1, 1]))
    with pytest.raises(ValueError):
        run_vinberg(QuadraticForm.diagonal([-1, -1, 1, 1]))
