"""Line-integral construction of the invariant forms on A^2, A = C, H, O.

For C and H the line ``l_m = {(x, m x)}`` is a right A-submodule and has the
coframe ``alpha_c = dx_c + sum_j (m u_c)_j dx_{n+j}`` dual to the frame
``(u_c, m u_c)``.  For O the slope acts on the right, ``l_m = {(x, x m)}``,
matching the ``R_u`` blocks of the Spin(9) involutions.  Integrating ``alpha_1 ^ ... ^ alpha_n``
against ``(1 + |m|^2)^(-3n/2) dm`` over ``m in R^n`` gives the raw form;
every blade coefficient is a polynomial in ``m`` whose monomial integrals are
exact rational multiples of ``pi^(n/2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .cayley import Octonion, omul
from .errors import Divergent
from .exterior import KForm, blade_mask, mask_indices, merge_sign
from .scalars import ScaledScalar

# Dimension 8 uses x m; associative cases use m x.
SLOPE_ON_RIGHT = {1: False, 2: False, 4: False, 8: True}

ANCHORS = {
    2: ((1, 2), 1),
    4: ((1, 2, 3, 4), -6),
    8: ((1, 2, 3, 4, 5, 6, 7, 8), -14),
}


class MPoly:
    """Sparse polynomial in ``nvars`` variables with exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, nvars: int, i: int, coeff=1) -> MPoly:
        """``coeff * m_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): coeff})

    @classmethod
    def const(cls, nvars: int, c=1) -> MPoly:
        return cls(nvars, {(0,) * nvars: c})

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"MPoly({self.terms})"

    def __add__(self, o: MPoly) -> MPoly:
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    def __neg__(self) -> MPoly:
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, o) -> MPoly:
        if not isinstance(o, MPoly):
            return MPoly(self.nvars, {e: c * o for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                t *= x**k
            total += t
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)


class PolyForm:
    """Homogeneous form whose blade coefficients are :class:`MPoly`."""

    __slots__ = ("dim", "grade", "nvars", "terms")

    def __init__(self, dim: int, grade: int, nvars: int, terms=None):
        self.dim, self.grade, self.nvars = dim, grade, nvars
        self.terms = {m: p for m, p in (terms or {}).items() if p.terms}

    def coeff(self, indices) -> MPoly:
        from .exterior import blade_mask, permutation_sign

        s = permutation_sign(indices)
        p = self.terms.get(blade_mask(indices))
        if not s or p is None:
            return MPoly(self.nvars)
        return p * s

    def at(self, point) -> KForm:
        """Specialise the polynomial coefficients at a point ``m``."""
        return KForm(self.dim, self.grade, {m: p.evaluate(point) for m, p in self.terms.items()})

    def wedge(self, other: PolyForm) -> PolyForm:
        out: dict = {}
        for ma, pa in self.terms.items():
            for mb, pb in other.terms.items():
                if ma & mb:
                    continue
                prod = pa * pb * merge_sign(ma, mb)
                key = ma | mb
                hit = out.get(key)
                out[key] = prod if hit is None else hit + prod
        return PolyForm(self.dim, self.grade + other.grade, self.nvars, out)


def line_coframe(algebra_dim: int) -> list[PolyForm]:
    """The 1-forms ``alpha_1, ..., alpha_n`` on A^2 = R^{2n} with coefficients in ``m``."""
    n = algebra_dim
    if n not in (1, 2, 4, 8):
        raise ValueError("algebra dimension must be 1, 2, 4 or 8")
    out = []
    for c in range(1, n + 1):
        terms = {1 << (c - 1): MPoly.const(n)}
        image: dict[int, MPoly] = {}
        for v in range(1, n + 1):
            if SLOPE_ON_RIGHT[n]:
                mu = omul(Octonion.unit(c), Octonion.unit(v)).coords
            else:
                mu = omul(Octonion.unit(v), Octonion.unit(c)).coords
            for j in range(n):
                if mu[j]:
                    p = MPoly.var(n, v, mu[j])
                    image[j] = image[j] + p if j in image else p
        for j, p in image.items():
            terms[1 << (n + j)] = p
        out.append(PolyForm(2 * n, 1, n, terms))
    return out


def _half_odd_gamma_ratio(a: int) -> Fraction:
    """Gamma(a + 1/2) / Gamma(1/2) = (2a - 1)!! / 2^a."""
    num = 1
    for k in range(1, 2 * a, 2):
        num *= k
    return Fraction(num, 2**a)


def moment(exponents, N: int) -> ScaledScalar:
    """``int_{R^n} prod m_i^(2 a_i) (1 + |m|^2)^(-N) dm`` for ``a = exponents``.

    Equal to ``prod Gamma(a_i + 1/2) Gamma(N - n/2 - |a|) / (Gamma(1/2)^n Gamma(N)) pi^(n/2)``.
    Only even ``n`` is supported, so the result is a rational multiple of an
    integer power of pi.
    """
    a = list(exponents)
    n = len(a)
    if any(x < 0 for x in a):
        raise ValueError("exponents must be non-negative")
    if n % 2:
        raise ValueError("odd number of variables gives a half-integer power of pi")
    s = sum(a)
    if 2 * N <= n + 2 * s:
        raise Divergent(f"integral diverges: need N > n/2 + sum(a), got N={N}, n={n}, sum={s}")
    val = Fraction(factorial(N - n // 2 - s - 1), factorial(N - 1))
    for x in a:
        val *= _half_odd_gamma_ratio(x)
    return ScaledScalar(val, n // 2)


def integrate_poly(p: MPoly, N: int) -> ScaledScalar:
    """Integrate a polynomial against ``(1 + |m|^2)^(-N)``; odd monomials vanish."""
    n = p.nvars
    total = Fraction(0)
    for e, c in p.terms.items():
        if any(k & 1 for k in e):
            continue
        total += c * moment([k // 2 for k in e], N).value
    return ScaledScalar(total, n // 2)


def weight_exponent(algebra_dim: int) -> int:
    """Total exponent of ``(1 + |m|^2)`` in the integrand: n from the measure plus n/2 from the projection."""
    return algebra_dim + algebra_dim // 2


@dataclass(frozen=True)
class BergerResult:
    algebra_dim: int
    raw: dict  # blade mask -> ScaledScalar
    normalized: KForm
    constant_c: ScaledScalar

    def raw_form(self) -> KForm:
        """The raw form with its pi power divided out."""
        return KForm(self.normalized.dim, self.normalized.grade, {m: v.value for m, v in self.raw.items()})

    @property
    def pi_power(self) -> int:
        return self.algebra_dim // 2


def coframe_product(algebra_dim: int) -> PolyForm:
    """``alpha_1 ^ ... ^ alpha_n`` as a PolyForm."""
    alphas = line_coframe(algebra_dim)
    acc = alphas[0]
    for a in alphas[1:]:
        acc = acc.wedge(a)
    return acc


_BERGER_CACHE: dict = {}


def berger_form(algebra_dim: int) -> BergerResult:
    """Exact line integral for A of dimension 2, 4 or 8, rescaled to integers.

    The scale is fixed by the anchor coefficients in :data:`ANCHORS`; for
    dimensions 2 and 8 this is the coprime-integer normalisation, for
    dimension 4 it is twice that (so the result is a sum of squares of
    Kaehler forms).
    """
    if algebra_dim not in ANCHORS:
        raise ValueError("algebra dimension must be 2, 4 or 8")
    hit = _BERGER_CACHE.get(algebra_dim)
    if hit is not None:
        return hit
    N = weight_exponent(algebra_dim)
    prod = coframe_product(algebra_dim)
    raw = {}
    for m, p in prod.terms.items():
        v = integrate_poly(p, N)
        if v.value:
            raw[m] = v
    anchor_idx, anchor_val = ANCHORS[algebra_dim]
    scale = Fraction(anchor_val) / raw[blade_mask(anchor_idx)].value
    normalized = KForm(2 * algebra_dim, algebra_dim, {m: v.value * scale for m, v in raw.items()})
    if any(isinstance(c, Fraction) for c in normalized.terms.values()):
        raise ArithmeticError("anchor scaling did not produce integer coefficients")
    const = ScaledScalar(scale, -(algebra_dim // 2))
    res = BergerResult(algebra_dim, raw, normalized, const)
    _BERGER_CACHE[algebra_dim] = res
    return res


def coefficient_gcd(a: KForm) -> int:
    return gcd(*(int(c) for c in a.terms.values()))


def raw_terms_text(res: BergerResult) -> list[tuple[tuple, ScaledScalar]]:
    return sorted((mask_indices(m), v) for m, v in res.raw.items())
