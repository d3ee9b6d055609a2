"""Exact arithmetic over Z[sqrt(3)] and Galois-conjugate signatures.

Used for the Galois-conjugation nonarithmeticity test: a lattice preserving
a form over Z[sqrt(3)] whose two real embeddings have signatures of
hyperbolic and of mixed type cannot be arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .forms import DegenerateFormError, Signature, _symmetric_diagonal


def _sign_a_plus_b_root3(a, b) -> int:
    """Exact sign of a + b*sqrt(3) for rational a, b."""
    if a == 0 and b == 0:
        return 0
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 against 3 b^2 (sqrt(3) is irrational, so no tie)
    lhs, rhs = a * a, 3 * b * b
    if lhs == rhs:
        raise ArithmeticError("a^2 == 3 b^2 is impossible for nonzero rational a, b")
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


@dataclass(frozen=True)
class QuadRingElement:
    """a + b*sqrt(3) with integer a, b."""

    a: int
    b: int

    def conjugate(self) -> "QuadRingElement":
        return QuadRingElement(self.a, -self.b)

    def __add__(self, other):
        return QuadRingElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return QuadRingElement(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return QuadRingElement(-self.a, -self.b)

    def __mul__(self, other):
        return QuadRingElement(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self, embedding: int = 1) -> int:
        """Sign under the embedding sqrt(3) -> +sqrt(3) (embedding=1) or -sqrt(3) (-1)."""
        return _sign_a_plus_b_root3(self.a, self.b if embedding >= 0 else -self.b)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*r3"


class _F3:
    """Element of the field Q(sqrt(3)), as a pair of Fractions."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        return _F3(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return _F3(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        return _F3(self.a * other.a + 3 * self.b * other.b, self.a * other.b + self.b * other.a)

    def __truediv__(self, other):
        # multiply by the conjugate; the field norm a^2 - 3 b^2 is nonzero
        norm = other.a * other.a - 3 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(3))")
        a = (self.a * other.a - 3 * self.b * other.b) / norm
        b = (self.b * other.a - self.a * other.b) / norm
        return _F3(a, b)

    def sign(self, embedding: int = 1) -> int:
        return _sign_a_plus_b_root3(self.a, self.b if embedding >= 0 else -self.b)


class QuadRingForm:
    """A symmetric form with entries in Z[sqrt(3)]."""

    def __init__(self, gram):
        rows = tuple(tuple(self._coerce(e) for e in row) for row in gram)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        self.gram = rows
        self.dim = n

    @staticmethod
    def _coerce(e) -> QuadRingElement:
        if isinstance(e, QuadRingElement):
            return e
        return QuadRingElement(int(e), 0)

    @classmethod
    def diagonal(cls, entries) -> "QuadRingForm":
        entries = [cls._coerce(e) for e in entries]
        zero = QuadRingElement(0, 0)
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    def conjugate(self) -> "QuadRingForm":
        """The form with every entry Galois-conjugated (sqrt(3) -> -sqrt(3))."""
        return QuadRingForm([[e.conjugate() for e in row] for row in self.gram])

    def __eq__(self, other):
        return isinstance(other, QuadRingForm) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"QuadRingForm({[[str(e) for e in row] for row in self.gram]})"


def conjugate_signature_pair(form: QuadRingForm) -> tuple[Signature, Signature]:
    """Signatures of the two real embeddings sqrt(3) -> +sqrt(3) and -sqrt(3).

    The Gram matrix is diagonalized once over Q(sqrt(3)); the two signatures
    are read off the same diagonal under the two embeddings.  A nonzero
    element of the field is nonzero in both embeddings, so degeneracy is a
    single condition.
    """
    lifted = [[_F3(e.a, e.b) for e in row] for row in form.gram]
    diag = _symmetric_diagonal(lifted)
    sig = []
    for embedding in (1, -1):
        signs = [d.sign(embedding) for d in diag]
        if any(s == 0 for s in signs):
            raise DegenerateFormError("an embedding of the form is degenerate")
        sig.append(Signature(signs.count(1), signs.count(-1)))
    return sig[0], sig[1]


def nonarithmeticity_witness(form: QuadRingForm) -> bool:
    """True iff one embedding has hyperbolic signature {1,4} and its conjugate mixed {2,3}.

    Accepts both orientation conventions, i.e. (1,4) vs (4,1) and (3,2) vs (2,3).
    """
    if form.dim != 5:
        raise ValueError("the witness test is defined for forms of dimension 5")
    first, second = conjugate_signature_pair(form)
    pair = {tuple(sorted(first.as_pair())), tuple(sorted(second.as_pair()))}
    return pair == {(1, 4), (2, 3)}


_ENTRY_RE = re.compile(r"^([+-]?\d+)?(?:(?<=\d)([+-]\d+)\*r3|([+-]?\d+)\*r3)?$")


def parse_quadring_entry(token: str) -> QuadRingElement:
    """Parse an entry written as `a`, `a+b*r3`, `a-b*r3` or `b*r3`."""
    token = token.strip().replace(" ", "")
    m = _ENTRY_RE.match(token)
    if not m or (m.group(1) is None and m.group(3) is None):
        raise ValueError(f"cannot parse Z[sqrt(3)] entry {token!r}")
    if m.group(3) is not None:
        return QuadRingElement(0, int(m.group(3)))
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) is not None else 0
    return QuadRingElement(a, b)


def parse_quadring_form_text(text: str) -> QuadRingForm:
    """Parse the form file format with entries allowed to mention r3."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty form description")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "dim":
        raise ValueError("form file must start with 'dim n'")
    n = int(head[1])
    if len(lines) >= 2 and lines[1].split()[0] == "diag":
        entries = [parse_quadring_entry(tok) for tok in lines[1].split()[1:]]
        if len(entries) != n:
            raise ValueError(f"expected {n} diagonal entries, got {len(entries)}")
        return QuadRingForm.diagonal(entries)
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} Gram rows after the header")
    rows = []
    for ln in lines[1:]:
        row = [parse_quadring_entry(tok) for tok in ln.split()]
        if len(row) != n:
            raise ValueError(f"expected {n} entries per Gram row")
        rows.append(row)
    return QuadRingForm(rows)
