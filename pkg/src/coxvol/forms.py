"""Exact arithmetic on integral quadratic forms.

Signatures, discriminant-group exponents and admissible root norms are all
computed over arbitrary-precision integers and rationals; floating point
never enters a decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt


class DegenerateFormError(ValueError):
    """The operation requires a nondegenerate form (nonzero Gram determinant)."""


@dataclass(frozen=True)
class Signature:
    """Inertia of a nondegenerate symmetric form: counts of positive and negative squares."""

    positive: int
    negative: int

    def as_pair(self) -> tuple[int, int]:
        return (self.positive, self.negative)

    def __str__(self) -> str:
        return f"({self.positive},{self.negative})"


def _symmetric_diagonal(matrix):
    """Diagonal of a congruent diagonalization U^T M U of a symmetric matrix.

    Works over any field whose elements support +, -, *, / and truthiness.
    A zero diagonal pivot is repaired by the completion step x_i <- x_i + x_j,
    which turns a nonzero off-diagonal entry into a usable pivot.
    Raises DegenerateFormError on a singular matrix.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    diag = []
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][i]), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j]),
                None,
            )
            if pair is None:
                raise DegenerateFormError("symmetric matrix is degenerate")
            i, j = pair
            for c in range(n):
                m[i][c] = m[i][c] + m[j][c]
            for r in range(n):
                m[r][i] = m[r][i] + m[r][j]
            pivot = i
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            for r in range(n):
                m[r][k], m[r][pivot] = m[r][pivot], m[r][k]
        d = m[k][k]
        for r in range(k + 1, n):
            if m[r][k]:
                f = m[r][k] / d
                for c in range(k, n):
                    m[r][c] = m[r][c] - f * m[k][c]
                for c in range(k, n):
                    m[c][r] = m[r][c]
        diag.append(d)
    return diag


def _bareiss_determinant(rows) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            swap = next((r for r in range(t + 1, n) if a[r][t] != 0), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        for r in range(t + 1, n):
            for c in range(t + 1, n):
                a[r][c] = (a[r][c] * a[t][t] - a[r][t] * a[t][c]) // prev
            a[r][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


class QuadraticForm:
    """A symmetric bilinear form on Z^n given by an integer Gram matrix.

    Vectors are integer sequences; B(x, y) = x^T G y and Q(x) = B(x, x).
    """

    def __init__(self, gram):
        rows = tuple(tuple(int(e) for e in row) for row in gram)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        self.gram = rows
        self.dim = n

    @classmethod
    def diagonal(cls, entries) -> "QuadraticForm":
        entries = [int(e) for e in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_diagonal(self) -> bool:
        return all(
            self.gram[i][j] == 0
            for i in range(self.dim)
            for j in range(self.dim)
            if i != j
        )

    def diagonal_entries(self) -> tuple[int, ...]:
        if not self.is_diagonal:
            raise ValueError("form is not diagonal")
        return tuple(self.gram[i][i] for i in range(self.dim))

    def bilinear(self, x, y) -> int:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match form dimension")
        g = self.gram
        return sum(x[i] * sum(g[i][j] * y[j] for j in range(self.dim)) for i in range(self.dim))

    def gram_times(self, x) -> tuple[int, ...]:
        """The vector G x, so that B(y, x) = y . (G x)."""
        g = self.gram
        return tuple(sum(g[i][j] * x[j] for j in range(self.dim)) for i in range(self.dim))

    def value(self, x) -> int:
        return self.bilinear(x, x)

    @cached_property
    def determinant(self) -> int:
        return _bareiss_determinant(self.gram)

    @cached_property
    def signature(self) -> Signature:
        if self.determinant == 0:
            raise DegenerateFormError("form has zero determinant")
        diag = _symmetric_diagonal([[Fraction(e) for e in row] for row in self.gram])
        pos = sum(1 for d in diag if d > 0)
        neg = sum(1 for d in diag if d < 0)
        return Signature(pos, neg)

    def __eq__(self, other):
        return isinstance(other, QuadraticForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        if self.is_diagonal:
            return f"QuadraticForm.diagonal({list(self.diagonal_entries())})"
        return f"QuadraticForm({[list(r) for r in self.gram]})"


def signature(form: QuadraticForm) -> Signature:
    """Counts of positive and negative squares, by exact congruent diagonalization."""
    return form.signature


def smith_invariant_factors(rows) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix (Smith normal form)."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    n, m = len(a), len(a[0])
    factors = []
    t = 0
    while t < min(n, m):
        piv = next(
            ((i, j) for i in range(t, n) for j in range(t, m) if a[i][j] != 0), None
        )
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]
        while True:
            clean = True
            for r in range(t + 1, n):
                if a[r][t] == 0:
                    continue
                q = a[r][t] // a[t][t]
                a[r] = [x - q * y for x, y in zip(a[r], a[t])]
                if a[r][t] != 0:
                    a[t], a[r] = a[r], a[t]
                    clean = False
            for c in range(t + 1, m):
                if a[t][c] == 0:
                    continue
                q = a[t][c] // a[t][t]
                for row in a:
                    row[c] -= q * row[t]
                if a[t][c] != 0:
                    for row in a:
                        row[t], row[c] = row[c], row[t]
                    clean = False
            if not clean:
                continue
            bad = next(
                (
                    (r, c)
                    for r in range(t + 1, n)
                    for c in range(t + 1, m)
                    if a[r][c] % a[t][t] != 0
                ),
                None,
            )
            if bad is None:
                break
            # divisibility repair: fold the offending row into the pivot row
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        factors.append(abs(a[t][t]))
        t += 1
    return factors


def discriminant_exponent(form: QuadraticForm) -> int:
    """Exponent of the discriminant group (dual lattice mod lattice).

    Equals the largest invariant factor of the Gram matrix.
    """
    factors = smith_invariant_factors(form.gram)
    if len(factors) < form.dim:
        raise DegenerateFormError("form has zero determinant")
    return factors[-1]


def _divisors(x: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(x) + 1):
        if x % d == 0:
            small.append(d)
            if d != x // d:
                large.append(x // d)
    return small + large[::-1]


def candidate_root_norms(form: QuadraticForm) -> list[int]:
    """All norms a root of the lattice can have, in ascending order.

    A primitive vector r with Q(r) = k and 2 B(r, .) integral against the
    whole lattice satisfies (2/k) r in the dual lattice, so k divides twice
    the discriminant exponent.
    """
    return _divisors(2 * discriminant_exponent(form))


def parse_form_text(text: str) -> QuadraticForm:
    """Parse the form file format: `dim n` then `diag a1 ... an` or n Gram rows."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty form description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dim":
        raise ValueError("form file must start with 'dim n'")
    n = int(head[1])
    if len(lines) >= 2 and lines[1].split()[0] == "diag":
        entries = [int(tok) for tok in lines[1].split()[1:]]
        if len(entries) != n:
            raise ValueError(f"expected {n} diagonal entries, got {len(entries)}")
        return QuadraticForm.diagonal(entries)
    rows = []
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} Gram rows after the header")
    for ln in lines[1:]:
        row = [int(tok) for tok in ln.split()]
        if len(row) != n:
            raise ValueError(f"expected {n} entries per Gram row")
        rows.append(row)
    return QuadraticForm(rows)


def format_form_text(form: QuadraticForm) -> str:
    if form.is_diagonal:
        diag = " ".join(str(e) for e in form.diagonal_entries())
        return f"dim {form.dim}\ndiag {diag}\n"
    rows = "\n".join(" ".join(str(e) for e in row) for row in form.gram)
    return f"dim {form.dim}\n{rows}\n"
