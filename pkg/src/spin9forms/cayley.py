"""Exact quaternions and octonions.

Octonions are pairs of quaternions ``x = h1 + h2 e`` multiplied by

    (h1 + h2 e)(h1' + h2' e) = (h1 h1' - conj(h2') h2) + (h2 conj(h1') + h2' h1) e

The flat coordinate order is ``1, i, j, k, e, f, g, h`` with ``f = ie``,
``g = je``, ``h = ke``.  Coefficients are ints or Fractions; nothing here
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import BadIndexSet, NonImaginaryInput
from .scalars import compact

UNIT_NAMES = ("1", "i", "j", "k", "e", "f", "g", "h")


class Quaternion:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a, self.b, self.c, self.d = compact(a), compact(b), compact(c), compact(d)

    @property
    def coords(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return f"Quaternion{self.coords}"

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, o):
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Quaternion(self.a * o, self.b * o, self.c * o, self.d * o)
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = o.coords
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, s):
        return self * s

    def conj(self) -> Quaternion:
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a**2 + self.b**2 + self.c**2 + self.d**2


class Octonion:
    """Octonion stored as the quaternion pair ``(h1, h2)``, i.e. ``h1 + h2 e``."""

    __slots__ = ("h1", "h2")

    def __init__(self, h1: Quaternion | None = None, h2: Quaternion | None = None):
        self.h1 = h1 if h1 is not None else Quaternion()
        self.h2 = h2 if h2 is not None else Quaternion()

    @classmethod
    def from_coords(cls, coords) -> Octonion:
        c = list(coords)
        if len(c) != 8:
            raise ValueError("an octonion needs 8 coordinates")
        return cls(Quaternion(*c[:4]), Quaternion(*c[4:]))

    @classmethod
    def unit(cls, index: int) -> Octonion:
        """Basis unit for 1-based ``index``: 1 -> 1, 2 -> i, ..., 8 -> h."""
        c = [0] * 8
        c[index - 1] = 1
        return cls.from_coords(c)

    @property
    def coords(self) -> tuple:
        return self.h1.coords + self.h2.coords

    def real(self):
        return self.h1.a

    def is_imaginary(self) -> bool:
        return self.h1.a == 0

    def im(self) -> Octonion:
        return Octonion(Quaternion(0, self.h1.b, self.h1.c, self.h1.d), self.h2)

    def __repr__(self):
        terms = [f"{c}{'' if n == '1' else n}" for c, n in zip(self.coords, UNIT_NAMES) if c]
        return "Octonion(" + (" + ".join(terms) if terms else "0") + ")"

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, o):
        return Octonion(self.h1 + o.h1, self.h2 + o.h2)

    def __sub__(self, o):
        return Octonion(self.h1 - o.h1, self.h2 - o.h2)

    def __neg__(self):
        return Octonion(-self.h1, -self.h2)

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            return Octonion(self.h1 * o, self.h2 * o)
        return omul(self, o)

    def __rmul__(self, s):
        return Octonion(self.h1 * s, self.h2 * s)

    def conj(self) -> Octonion:
        return oconj(self)

    def norm(self):
        return self.h1.norm() + self.h2.norm()

    def is_zero(self) -> bool:
        return not any(self.coords)


def omul(x: Octonion, y: Octonion) -> Octonion:
    h1, h2 = x.h1, x.h2
    k1, k2 = y.h1, y.h2
    return Octonion(h1 * k1 - k2.conj() * h2, h2 * k1.conj() + k2 * h1)


def oconj(x: Octonion) -> Octonion:
    return Octonion(x.h1.conj(), -x.h2)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """``(xy)z - x(yz)``."""
    return omul(omul(x, y), z) - omul(x, omul(y, z))


def cross(x: Octonion, y: Octonion) -> Octonion:
    """Cross product ``Im(conj(y) x)`` of two imaginary octonions."""
    if not (x.is_imaginary() and y.is_imaginary()):
        raise NonImaginaryInput("cross product is defined on imaginary octonions only")
    return omul(oconj(y), x).im()


def double_cross(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """``(x (conj(y) z) - z (conj(y) x)) / 2``."""
    yb = oconj(y)
    return (omul(x, omul(yb, z)) - omul(z, omul(yb, x))) * Fraction(1, 2)


def is_cayley_quadruple(q) -> bool:
    """True when the unit of one index is +-(double cross of the other three).

    The answer does not depend on which index is singled out; the smallest
    three are used.
    """
    idx = sorted(set(q))
    if len(idx) != 4 or len(list(q)) != 4 or idx[0] < 1 or idx[-1] > 8:
        raise BadIndexSet(f"expected 4 distinct indices in 1..8, got {q!r}")
    a, b, c, d = (Octonion.unit(i) for i in idx)
    w = double_cross(a, b, c)
    return w == d or w == -d


def cayley_quadruples() -> list[tuple[int, ...]]:
    return [q for q in combinations(range(1, 9), 4) if is_cayley_quadruple(q)]
