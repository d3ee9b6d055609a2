"""Root enumeration in hyperbolic lattices and the incremental chamber algorithm.

A root is a primitive lattice vector r of positive norm k = Q(r) whose
reflection x -> x - (2 B(r,x)/k) r preserves the lattice; equivalently
2 B(r, e_i) = 0 mod k for every basis vector.  Starting from a controlling
vector v0 of negative norm, mirrors are adopted outward in order of
increasing height B(r,v0)^2 / Q(r) until the chamber they cut out passes
the finite-volume test.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, isqrt

from .coxeter import CoxeterDiagram, build_diagram, finite_volume_check
from .forms import QuadraticForm, candidate_root_norms


@dataclass(frozen=True)
class Root:
    vector: tuple[int, ...]
    norm: int

    def __post_init__(self):
        if self.norm <= 0:
            raise ValueError("roots have positive norm")


def is_root(form: QuadraticForm, v, k: int) -> bool:
    """True iff v is primitive, Q(v) = k > 0, and 2 B(v, .) is divisible by k on the lattice."""
    v = tuple(int(x) for x in v)
    if k <= 0 or form.value(v) != k:
        return False
    g = 0
    for x in v:
        g = gcd(g, x)
    if g != 1:
        return False
    return all(2 * w % k == 0 for w in form.gram_times(v))


def reflect(form: QuadraticForm, root: Root, x) -> tuple[int, ...]:
    """Image of x under the reflection in root; integral by the crystallographic condition."""
    x = tuple(int(c) for c in x)
    twice = 2 * form.bilinear(root.vector, x)
    q, r = divmod(twice, root.norm)
    if r != 0:
        raise ValueError("vector is not carried to the lattice; not a root?")
    return tuple(c - q * rc for c, rc in zip(x, root.vector))


def _floor_sqrt_fraction(t: Fraction) -> int:
    """floor(sqrt(t)) for a nonnegative rational t."""
    if t < 0:
        raise ValueError("negative radicand")
    return isqrt(t.numerator // t.denominator)


def _floor_plus_sqrt(r: Fraction, t: Fraction) -> int:
    """Largest integer x with x <= r + sqrt(t), decided exactly."""
    def ok(x):
        d = x - r
        return d <= 0 or d * d <= t

    x = floor(r) + _floor_sqrt_fraction(t)
    while ok(x + 1):
        x += 1
    return x


def _ceil_minus_sqrt(r: Fraction, t: Fraction) -> int:
    """Smallest integer x with x >= r - sqrt(t), decided exactly."""
    def ok(x):
        d = r - x
        return d <= 0 or d * d <= t

    x = ceil(r) - _floor_sqrt_fraction(t)
    while ok(x - 1):
        x -= 1
    return x


def _is_primitive(v) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def _crystallographic(form: QuadraticForm, v, k: int) -> bool:
    return all(2 * w % k == 0 for w in form.gram_times(v))


def _enumerate_diagonal(form, t_index, k, a):
    """All candidate vectors for a diagonal Gram matrix and v0 = e_t, Q(e_t) < 0.

    B(x, e_t) = d_t x_t fixes the controlled coordinate; the rest satisfy
    sum_i d_i x_i^2 = k - d_t x_t^2 with every d_i > 0, a bounded search.
    """
    diag = form.diagonal_entries()
    d_t = diag[t_index]
    if a % d_t != 0:
        return []
    x_t = a // d_t
    budget = k - d_t * x_t * x_t
    if budget < 0:
        return []
    free = [i for i in range(form.dim) if i != t_index]
    out = []
    vec = [0] * form.dim
    vec[t_index] = x_t

    def rec(pos, rem):
        if pos == len(free):
            if rem == 0:
                out.append(tuple(vec))
            return
        i = free[pos]
        d = diag[i]
        bound = isqrt(rem // d)
        for x in range(-bound, bound + 1):
            vec[i] = x
            rec(pos + 1, rem - d * x * x)
        vec[i] = 0

    rec(0, budget)
    return out


def _enumerate_general(form, v0, k, a):
    """All candidate vectors via shell enumeration of the positive definite companion form.

    P(x) = |Q(v0)| Q(x) + 2 B(x, v0)^2 is positive definite for a form of
    signature (n, 1), and the constraints Q(x) = k, B(x, v0) = a confine x
    to the shell P(x) = |Q(v0)| k + 2 a^2.
    """
    n = form.dim
    q0 = form.value(v0)
    w = form.gram_times(v0)
    p = [
        [-q0 * form.gram[i][j] + 2 * w[i] * w[j] for j in range(n)]
        for i in range(n)
    ]
    c = Fraction(-q0 * k + 2 * a * a)
    if c < 0:
        return []
    # rational Cholesky P = sum_i D[i] (x_i + sum_{j>i} U[i][j] x_j)^2
    D = [Fraction(0)] * n
    U = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d = Fraction(p[i][i]) - sum(D[t] * U[t][i] * U[t][i] for t in range(i))
        if d <= 0:
            raise ValueError("companion form is not positive definite; need signature (n,1)")
        D[i] = d
        for j in range(i + 1, n):
            num = Fraction(p[i][j]) - sum(D[t] * U[t][i] * U[t][j] for t in range(i))
            U[i][j] = num / d
    out = []
    x = [0] * n

    def rec(i, rem):
        if i < 0:
            if rem == 0:
                out.append(tuple(x))
            return
        s = sum(U[i][j] * x[j] for j in range(i + 1, n))
        t = rem / D[i]
        lo = _ceil_minus_sqrt(-s, t)
        hi = _floor_plus_sqrt(-s, t)
        for xi in range(lo, hi + 1):
            x[i] = xi
            rec(i - 1, rem - D[i] * (xi + s) ** 2)
        x[i] = 0

    rec(n - 1, c)
    return out


def _controlled_index(form, v0):
    """Index t when the Gram matrix is diagonal and v0 = +-e_t; None otherwise."""
    if not form.is_diagonal:
        return None
    support = [i for i, c in enumerate(v0) if c != 0]
    if len(support) != 1 or abs(v0[support[0]]) != 1:
        return None
    return support[0]


def enumerate_roots(form: QuadraticForm, v0, k: int, a: int) -> list[Root]:
    """All roots r with Q(r) = k and B(r, v0) = a, in lexicographic coordinate order.

    Finite because the form is positive definite on the orthogonal complement
    of v0, which bounds every coordinate.
    """
    v0 = tuple(int(c) for c in v0)
    if form.value(v0) >= 0:
        raise ValueError("controlling vector must have negative norm")
    if k <= 0:
        raise ValueError("root norms are positive")
    t_index = _controlled_index(form, v0)
    if t_index is not None:
        # B(x, v0) = sign * d_t * x_t, so the controlled coordinate satisfies
        # d_t * x_t = sign * a
        sign = v0[t_index]
        vectors = _enumerate_diagonal(form, t_index, k, a * sign)
    else:
        vectors = [
            v for v in _enumerate_general(form, v0, k, a)
            if form.bilinear(v, v0) == a
        ]
    roots = [
        Root(v, k)
        for v in vectors
        if form.value(v) == k and _is_primitive(v) and _crystallographic(form, v, k)
    ]
    roots.sort(key=lambda r: r.vector)
    return roots


def roots_orthogonal_to(form: QuadraticForm, v0) -> list[Root]:
    """All roots orthogonal to v0, over every admissible norm."""
    out = []
    for k in candidate_root_norms(form):
        out.extend(enumerate_roots(form, v0, k, 0))
    return out


def initial_chamber(form: QuadraticForm, v0) -> list[Root]:
    """Simple roots of the finite root system orthogonal to v0.

    The roots orthogonal to v0 live in a positive definite space.  They are
    split into halves by the generic functional 'first nonzero coordinate is
    positive', and the simple roots are the positive roots that are not the
    sum of two positive roots.  Result sorted by (norm, coordinates).
    """
    all_roots = roots_orthogonal_to(form, v0)
    positive = [r for r in all_roots if _lex_positive(r.vector)]
    pos_set = {r.vector for r in positive}
    simple = []
    for r in positive:
        decomposable = any(
            _vector_sub(r.vector, s) in pos_set for s in pos_set if s != r.vector
        )
        if not decomposable:
            simple.append(r)
    simple.sort(key=lambda r: (r.norm, r.vector))
    return simple


def _lex_positive(v) -> bool:
    for c in v:
        if c != 0:
            return c > 0
    return False


def _vector_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _matrix_rank(vectors) -> int:
    rows = [[Fraction(c) for c in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class AcceptedRoot:
    vector: tuple[int, ...]
    norm: int
    height: Fraction

    def as_root(self) -> Root:
        return Root(self.vector, self.norm)


@dataclass
class VinbergState:
    """Progress of the chamber construction: accepted mirrors in height order."""

    form: QuadraticForm
    controlling_vector: tuple[int, ...]
    accepted: tuple[AcceptedRoot, ...]
    frontier: Fraction  # largest height fully or partially processed
    complete: bool

    @property
    def roots(self) -> list[Root]:
        return [r.as_root() for r in self.accepted]

    def diagram(self) -> CoxeterDiagram:
        return build_diagram(self.roots, self.form)


class VinbergIncompleteError(RuntimeError):
    """Enumeration limits were exhausted before the finite-volume test passed."""

    def __init__(self, message: str, state: VinbergState):
        super().__init__(message)
        self.state = state


def _norm_height_stream(norms):
    """Heap seed: for each norm k only inner products with 2a = 0 mod k can occur."""
    entries = []
    for k in norms:
        step = k // gcd(2, k)
        a = -step
        heapq.heappush(entries, (Fraction(a * a, k), k, a, step))
    return entries


def run_vinberg(
    form: QuadraticForm,
    v0=None,
    *,
    max_height=100,
    max_roots: int = 50,
) -> VinbergState:
    """Build a fundamental chamber for the reflection subgroup of the lattice.

    Starting from the simple roots orthogonal to v0, candidate roots are
    examined in ascending height B(r, v0)^2 / Q(r) (ties: smaller norm first,
    then lexicographic coordinates) and adopted whenever they make a
    nonpositive inner product with everything already adopted.  After each
    adoption the finite-volume test runs; the state is complete when it
    passes.  Exhausting max_height or max_roots raises
    VinbergIncompleteError carrying the partial state.
    """
    sig = form.signature
    if sig.negative != 1 or sig.positive < 2:
        raise ValueError(f"need a form of signature (n,1) with n >= 2, got {sig}")
    n = form.dim - 1
    if v0 is None:
        v0 = (1,) + (0,) * n
    v0 = tuple(int(c) for c in v0)
    if form.value(v0) >= 0:
        raise ValueError("controlling vector must have negative norm")
    max_height = Fraction(max_height)

    accepted: list[AcceptedRoot] = []
    gram_times: list[tuple[int, ...]] = []  # cached G r for fast inner products

    def adopt(root: Root, height: Fraction):
        accepted.append(AcceptedRoot(root.vector, root.norm, height))
        gram_times.append(form.gram_times(root.vector))

    def compatible(vec) -> bool:
        return all(
            sum(a * b for a, b in zip(vec, gw)) <= 0 for gw in gram_times
        )

    def state(frontier, complete):
        return VinbergState(form, v0, tuple(accepted), frontier, complete)

    for root in initial_chamber(form, v0):
        if not compatible(root.vector):
            raise AssertionError("simple roots of the orthogonal system must be non-acute")
        adopt(root, Fraction(0))
    if len(accepted) > max_roots:
        raise VinbergIncompleteError(
            f"initial chamber already has {len(accepted)} > {max_roots} roots",
            state(Fraction(0), False),
        )

    norms = candidate_root_norms(form)
    heap = _norm_height_stream(norms)
    frontier = Fraction(0)

    def finished() -> bool:
        if _matrix_rank([r.vector for r in accepted]) <= n:
            return False
        return finite_volume_check(build_diagram([r.as_root() for r in accepted], form), n)

    while heap:
        height, k, a, step = heapq.heappop(heap)
        if height > max_height:
            raise VinbergIncompleteError(
                f"no finite-volume chamber below height {max_height}",
                state(frontier, False),
            )
        frontier = height
        for root in enumerate_roots(form, v0, k, a):
            if compatible(root.vector):
                adopt(root, height)
                if len(accepted) > max_roots:
                    raise VinbergIncompleteError(
                        f"more than {max_roots} roots adopted",
                        state(frontier, False),
                    )
                if finished():
                    return state(frontier, True)
        heapq.heappush(heap, (Fraction((a - step) ** 2, k), k, a - step, step))
    raise VinbergIncompleteError("candidate stream exhausted", state(frontier, False))
