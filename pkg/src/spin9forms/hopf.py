"""Structure matrices of the Hopf-type geometries and their Kaehler forms.

Matrices act on column vectors; column ``c`` of a multiplication matrix is
the image of the ``c``-th basis unit.  The flat basis of O is
1, i, j, k, e, f, g, h, and C, H sit inside it as the first 2 and 4 units.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import constants
from .cayley import Octonion, omul
from .errors import IndexOutOfRange, NotOnSphere, NotSkew, Spin7HasNoInvolutions
from .exterior import FormMatrix, KForm
from .linalg import ExactMatrix

SPIN7_UNITS = ("i", "j", "k", "e", "f", "g", "h")

# Quaternionic right and left multiplications by i, j, k, as printed.
RH = {
    "i": ExactMatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
    "j": ExactMatrix([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]),
    "k": ExactMatrix([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]),
}
LH = {
    "i": ExactMatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]),
    "j": ExactMatrix([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
    "k": ExactMatrix([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]),
}


class StructureFamily(enum.Enum):
    """(ambient dim, number of generators, dim of the division algebra)."""

    COMPLEX_HOPF = (4, 3, 2)
    QUATERNION_HOPF = (8, 5, 4)
    SPIN9 = (16, 9, 8)
    SPIN7 = (8, 7, 8)

    @property
    def dim(self) -> int:
        return self.value[0]

    @property
    def d(self) -> int:
        return self.value[1]

    @property
    def algebra_dim(self) -> int:
        return self.value[2]


def unit_index(u) -> int:
    """1-based flat index of a unit given as an int or one of '1ijkefgh'."""
    if isinstance(u, str):
        return "1ijkefgh".index(u) + 1
    return u


def _embed(u, algebra_dim: int) -> Octonion:
    if isinstance(u, Octonion):
        if any(u.coords[algebra_dim:]):
            raise ValueError(f"{u!r} does not lie in the {algebra_dim}-dimensional subalgebra")
        return u
    c = list(u)
    return Octonion.from_coords(c + [0] * (8 - len(c)))


def right_mult_matrix(u, algebra_dim: int = 8) -> ExactMatrix:
    """Matrix of ``x -> x u`` on the subalgebra of the given dimension."""
    u = _embed(u, algebra_dim)
    cols = [omul(Octonion.unit(c + 1), u).coords[:algebra_dim] for c in range(algebra_dim)]
    return ExactMatrix(list(zip(*cols)))


def left_mult_matrix(u, algebra_dim: int = 8) -> ExactMatrix:
    """Matrix of ``x -> u x`` on the subalgebra of the given dimension."""
    u = _embed(u, algebra_dim)
    cols = [omul(u, Octonion.unit(c + 1)).coords[:algebra_dim] for c in range(algebra_dim)]
    return ExactMatrix(list(zip(*cols)))


def generator(r, u, algebra_dim: int = 8) -> ExactMatrix:
    """The involution ``[[r, R_conj(u)], [R_u, -r]]`` of A^2 for (r, u) on the unit sphere."""
    r = Fraction(r)
    u = _embed(u, algebra_dim)
    if r * r + u.norm() != 1:
        raise NotOnSphere(f"r^2 + |u|^2 = {r * r + u.norm()} != 1")
    ident = ExactMatrix.identity(algebra_dim)
    return ExactMatrix.blocks(
        [
            [ident * r, right_mult_matrix(u.conj(), algebra_dim)],
            [right_mult_matrix(u, algebra_dim), ident * -r],
        ]
    )


def rational_sphere_point(t) -> tuple[Fraction, Octonion]:
    """Inverse stereographic image of an integer (or rational) 8-vector on S^8."""
    t = [Fraction(x) for x in t]
    if len(t) != 8:
        raise ValueError("expected 8 coordinates")
    s = sum(x * x for x in t)
    r = (1 - s) / (1 + s)
    return r, Octonion.from_coords([2 * x / (1 + s) for x in t])


def involution(family: StructureFamily, alpha: int) -> ExactMatrix:
    if family is StructureFamily.SPIN7:
        raise Spin7HasNoInvolutions("Spin(7) is not generated by a family of anticommuting involutions")
    if not 1 <= alpha <= family.d:
        raise IndexOutOfRange(f"involution index {alpha} outside 1..{family.d}")
    a = family.algebra_dim
    if alpha == family.d:
        return generator(1, [0] * a, a)
    return generator(0, Octonion.unit(alpha), a)


def involutions(family: StructureFamily) -> list[ExactMatrix]:
    return [involution(family, a) for a in range(1, family.d + 1)]


def _spin7_right(u) -> ExactMatrix:
    if isinstance(u, int):
        if not 1 <= u <= 7:
            raise IndexOutOfRange(f"Spin(7) index {u} outside 1..7")
        u = SPIN7_UNITS[u - 1]
    if u not in SPIN7_UNITS:
        raise IndexOutOfRange(f"unknown imaginary unit {u!r}")
    return right_mult_matrix(Octonion.unit(unit_index(u)))


def complex_structure(family: StructureFamily, alpha, beta) -> ExactMatrix:
    """``I_alpha I_beta``; for SPIN7 the product ``R_alpha R_beta`` of right multiplications."""
    if family is StructureFamily.SPIN7:
        ia = alpha if isinstance(alpha, int) else SPIN7_UNITS.index(alpha) + 1
        ib = beta if isinstance(beta, int) else SPIN7_UNITS.index(beta) + 1
        if not ia < ib:
            raise IndexOutOfRange(f"expected alpha < beta, got {alpha}, {beta}")
        return _spin7_right(alpha) @ _spin7_right(beta)
    if not 1 <= alpha < beta <= family.d:
        raise IndexOutOfRange(f"expected 1 <= alpha < beta <= {family.d}, got {alpha}, {beta}")
    return involution(family, alpha) @ involution(family, beta)


def triple_structure(family: StructureFamily, alpha: int, beta: int, gamma: int) -> ExactMatrix:
    return involution(family, alpha) @ involution(family, beta) @ involution(family, gamma)


def kahler_form(A: ExactMatrix) -> KForm:
    """``sum_{i<j} A_ij dx_i ^ dx_j``, i.e. the 2-form ``(x, y) -> <x, A y>``."""
    if not A.is_skew():
        raise NotSkew("Kaehler forms are taken of skew-symmetric matrices")
    n = A.n
    return KForm(n, 2, {(1 << i) | (1 << j): A[i, j] for i in range(n) for j in range(i + 1, n) if A[i, j]})


@dataclass(frozen=True)
class KahlerMatrix:
    family: StructureFamily
    matrix: FormMatrix

    def entry(self, alpha, beta) -> KForm:
        if self.family is StructureFamily.SPIN7:
            alpha = alpha if isinstance(alpha, int) else SPIN7_UNITS.index(alpha) + 1
            beta = beta if isinstance(beta, int) else SPIN7_UNITS.index(beta) + 1
        return self.matrix.entry(alpha, beta)


_KAHLER_CACHE: dict = {}


def kahler_matrix(family: StructureFamily) -> KahlerMatrix:
    """Skew matrix of the Kaehler forms of all ``complex_structure(family, a, b)``."""
    hit = _KAHLER_CACHE.get(family)
    if hit is None:
        d = family.d
        upper = {
            (a, b): kahler_form(complex_structure(family, a, b))
            for a, b in combinations(range(1, d + 1), 2)
        }
        hit = KahlerMatrix(family, FormMatrix(d, family.dim, upper))
        _KAHLER_CACHE[family] = hit
    return hit


def spin7_two_forms() -> tuple[dict, dict]:
    """The 7 Kaehler forms of R_i..R_h, and the 21 complementary forms.

    Returns ``(phi, phi21)``: ``phi`` maps a unit name to a 2-form,
    ``phi21`` maps ``(number of primes, unit name)`` to a 2-form.
    """
    phi = {u: kahler_form(_spin7_right(u)) for u in SPIN7_UNITS}
    phi21 = {key: constants.form(text, 8) for key, text in constants.PHI21.items()}
    return phi, phi21


def normalized_trace_inner(A: ExactMatrix, B: ExactMatrix) -> Fraction:
    """``tr(A^T B) / n``."""
    return Fraction((A.T @ B).trace(), A.n)


def block_diag(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    return ExactMatrix.blocks([[A, ExactMatrix.zeros(A.n)], [ExactMatrix.zeros(A.n), B]])
