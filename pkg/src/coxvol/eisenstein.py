"""Eisenstein integers, the rank-5 Hermitian lattice of signature (4,1),
and the five diagonal anti-involutions with their fixed quadratic forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import QuadraticForm


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*w where w is a primitive cube root of unity (w^2 + w + 1 = 0)."""

    a: int
    b: int

    def conjugate(self) -> "EisensteinInt":
        # complex conjugation sends w to w^2 = -1 - w
        return EisensteinInt(self.a - self.b, -self.b)

    def __add__(self, other):
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        # (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def norm(self) -> int:
        """z * conj(z) = a^2 - a b + b^2, a nonnegative rational integer."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}w"
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}w"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
# theta = w - conj(w) generates the different; theta * conj(theta) = 3
THETA = OMEGA - OMEGA.conjugate()

EisVector = tuple[EisensteinInt, ...]

_SIGNS = (-1, 1, 1, 1, 1)


def hermitian_inner(x: EisVector, y: EisVector) -> EisensteinInt:
    """The signature-(4,1) Hermitian product -x0 conj(y0) + x1 conj(y1) + ... + x4 conj(y4)."""
    if len(x) != 5 or len(y) != 5:
        raise ValueError("vectors must have length 5")
    total = ZERO
    for s, xi, yi in zip(_SIGNS, x, y):
        term = xi * yi.conjugate()
        total = total + (term if s > 0 else -term)
    return total


class HermitianLattice:
    """The free rank-5 Eisenstein module with the inner product above."""

    rank = 5

    def inner(self, x: EisVector, y: EisVector) -> EisensteinInt:
        return hermitian_inner(x, y)

    def basis(self) -> list[EisVector]:
        return [
            tuple(ONE if i == j else ZERO for j in range(5)) for i in range(5)
        ]


E41 = HermitianLattice()


@dataclass(frozen=True)
class AntiInvolution:
    """The antilinear map z -> (eps_0 conj(z_0), ..., eps_4 conj(z_4)), eps_0 = +1."""

    epsilons: tuple[int, ...]

    def __post_init__(self):
        if len(self.epsilons) != 5 or self.epsilons[0] != 1:
            raise ValueError("need five signs with the first equal to +1")
        if any(e not in (-1, 1) for e in self.epsilons):
            raise ValueError("signs must be +1 or -1")

    @property
    def j(self) -> int:
        """Number of -1 signs."""
        return sum(1 for e in self.epsilons if e == -1)

    def apply(self, v: EisVector) -> EisVector:
        if len(v) != 5:
            raise ValueError("vectors must have length 5")
        out = []
        for e, z in zip(self.epsilons, v):
            w = z.conjugate()
            out.append(w if e > 0 else -w)
        return tuple(out)


def anti_involution_classes() -> list[AntiInvolution]:
    """The five conjugacy class representatives: j of eps_1..eps_4 equal -1, last j slots."""
    out = []
    for j in range(5):
        eps = (1,) + (1,) * (4 - j) + (-1,) * j
        out.append(AntiInvolution(eps))
    return out


def fixed_lattice_basis(chi: AntiInvolution) -> list[EisVector]:
    """A Z-basis of the fixed sublattice of chi.

    Coordinate i contributes e_i when eps_i = +1 (fixed entries are the
    rational integers) and theta * e_i when eps_i = -1 (entries with
    conj(z) = -z are the multiples of theta).
    """
    basis = []
    for i, e in enumerate(chi.epsilons):
        scale = ONE if e > 0 else THETA
        basis.append(tuple(scale if k == i else ZERO for k in range(5)))
    return basis


def fixed_lattice_form(chi: AntiInvolution) -> QuadraticForm:
    """Gram matrix of q(v) = h(v, v) on the fixed sublattice of chi.

    Since theta * conj(theta) = 3, the result is diag(-1, m1..m4) with
    m_i = 3 exactly where eps_i = -1.
    """
    basis = fixed_lattice_basis(chi)
    gram = []
    for bi in basis:
        row = []
        for bj in basis:
            val = hermitian_inner(bi, bj)
            if val.b != 0:
                raise ArithmeticError("fixed-lattice Gram entry is not a rational integer")
            row.append(val.a)
        gram.append(row)
    return QuadraticForm(gram)
