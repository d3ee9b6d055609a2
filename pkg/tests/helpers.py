"""Shared test utilities: brute-force oracles and random matrix generators."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd

from coxvol.forms import QuadraticForm


def random_unimodular(rng, n, steps=20):
    """Random element of GL(n, Z) as a product of shears, swaps and sign flips."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            for col in range(n):
                m[i][col] += c * m[j][col]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif kind == 2:
            m[i] = [-x for x in m[i]]
    return m


def congruent(form: QuadraticForm, u) -> QuadraticForm:
    """The form with Gram matrix U^T G U."""
    n = form.dim
    g = form.gram
    gu = [[sum(g[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    utgu = [
        [sum(u[k][i] * gu[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]
    return QuadraticForm(utgu)


def brute_force_roots(form: QuadraticForm, v0, k, a, bound):
    """Oracle: all roots with Q = k and B(., v0) = a found by scanning a coordinate box."""
    out = []
    n = form.dim
    for coords in product(range(-bound, bound + 1), repeat=n):
        if all(c == 0 for c in coords):
            continue
        if form.value(coords) != k:
            continue
        if form.bilinear(coords, v0) != a:
            continue
        g = 0
        for c in coords:
            g = gcd(g, c)
        if g != 1:
            continue
        if any(2 * w % k != 0 for w in form.gram_times(coords)):
            continue
        out.append(tuple(coords))
    return sorted(out)


def fraction_inverse_denominator_lcm(form: QuadraticForm) -> int:
    """Oracle for the discriminant exponent: smallest e with e * G^{-1} integral."""
    n = form.dim
    a = [[Fraction(form.gram[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    e = 1
    for row in inv:
        for x in row:
            e = e * x.denominator // gcd(e, x.denominator)
    return e


def matrix_rank(vectors) -> int:
    """Rank of a list of integer vectors, by fraction-exact elimination."""
    rows = [[Fraction(c) for c in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / lead
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def hyperbolic_triangle_triples(limit=7):
    """All (p, q, r) with 2 <= p <= q <= r <= limit and 1/p + 1/q + 1/r < 1."""
    out = []
    for p in range(2, limit + 1):
        for q in range(p, limit + 1):
            for r in range(q, limit + 1):
                if Fraction(1, p) + Fraction(1, q) + Fraction(1, r) < 1:
                    out.append((p, q, r))
    return out


def triangle_diagram(p, q, r):
    """Coxeter diagram of the (p,q,r) triangle reflection group."""
    from coxvol.coxeter import CoxeterDiagram

    return CoxeterDiagram.from_bond_spec(
        [1, 1, 1], {(0, 1): p, (1, 2): q, (0, 2): r}
    )
