"""Sparse exact exterior algebra on R^n, n <= 16.

A blade ``dx_{i1} ^ ... ^ dx_{ik}`` with ``i1 < ... < ik`` is stored as the
bitmask with bit ``i - 1`` set for each index.  Indices 9..16 are printed as
the primed coordinates 1'..8'.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from .errors import DimMismatch, GradeMismatch, MixedShapes, OddCoefficientRequested, OddSubset
from .linalg import ExactMatrix, det, rank
from .scalars import as_scalar, compact

Blade = tuple  # canonical 1-based index tuple, strictly increasing


def blade_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


@lru_cache(maxsize=None)
def mask_indices(mask: int) -> Blade:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq``; 0 if an entry repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv & 1 else 1


@lru_cache(maxsize=1 << 20)
def merge_sign(a: int, b: int) -> int:
    """Sign turning blade(a) ^ blade(b) into the sorted blade(a | b); a, b disjoint."""
    s = 0
    while b:
        low = b & -b
        s += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if s & 1 else 1


@lru_cache(maxsize=1 << 16)
def _submasks_of_size(mask: int, k: int) -> tuple[int, ...]:
    bits = [1 << (i - 1) for i in mask_indices(mask)]
    return tuple(sum(c) for c in combinations(bits, k))


class KForm:
    """Homogeneous exterior form: sparse map blade -> exact coefficient."""

    __slots__ = ("dim", "grade", "terms")

    def __init__(self, dim: int, grade: int, terms=None, *, check: bool = True):
        self.dim = dim
        self.grade = grade
        if terms is None:
            self.terms = {}
        elif check:
            clean = {}
            for m, c in terms.items():
                if c == 0:
                    continue
                if m.bit_count() != grade or m >> dim:
                    raise GradeMismatch(f"blade {mask_indices(m)} does not fit grade {grade}, dim {dim}")
                clean[m] = compact(as_scalar(c))
            self.terms = clean
        else:
            self.terms = terms

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, dim: int, grade: int) -> KForm:
        return cls(dim, grade, {}, check=False)

    @classmethod
    def constant(cls, dim: int, value=1) -> KForm:
        return cls(dim, 0, {0: value})

    @classmethod
    def basis(cls, dim: int, indices, coeff=1) -> KForm:
        """The blade ``coeff * dx_{i1} ^ ... ^ dx_{ik}``; unsorted indices pick up a sign."""
        s = permutation_sign(indices)
        return cls(dim, len(indices), {blade_mask(indices): s * coeff} if s else {})

    @classmethod
    def from_dict(cls, dim: int, items) -> KForm:
        """Build from ``{index tuple: coeff}``; all tuples must have one length."""
        items = dict(items)
        grades = {len(k) for k in items}
        if len(grades) > 1:
            raise GradeMismatch("mixed grades")
        grade = grades.pop() if grades else 0
        out = KForm.zero(dim, grade)
        for idx, c in items.items():
            out = out + KForm.basis(dim, idx, c)
        return out

    # queries ------------------------------------------------------------
    def coeff(self, indices):
        """Coefficient of the blade with these (possibly unsorted) indices."""
        s = permutation_sign(indices)
        if not s:
            return 0
        return s * self.terms.get(blade_mask(indices), 0)

    def items(self):
        """(index tuple, coeff) pairs sorted lexicographically by index tuple."""
        return sorted((mask_indices(m), c) for m, c in self.terms.items())

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, KForm):
            return NotImplemented
        if not self.terms and not other.terms:
            return self.dim == other.dim
        return (self.dim, self.grade, self.terms) == (other.dim, other.grade, other.terms)

    def __hash__(self):
        return hash((self.dim, self.grade, frozenset(self.terms.items())))

    def __repr__(self):
        return f"KForm(dim={self.dim}, grade={self.grade}, {format_form(self) or '0'})"

    def __str__(self):
        return format_form(self) or "0"

    # linear structure ---------------------------------------------------
    def _same_shape(self, other):
        if self.dim != other.dim:
            raise DimMismatch(f"dimensions {self.dim} and {other.dim}")
        if self.grade != other.grade and self.terms and other.terms:
            raise GradeMismatch(f"grades {self.grade} and {other.grade}")

    def __add__(self, other: KForm) -> KForm:
        self._same_shape(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return KForm(self.dim, self.grade, out, check=False)

    def __neg__(self) -> KForm:
        return KForm(self.dim, self.grade, {m: -c for m, c in self.terms.items()}, check=False)

    def __sub__(self, other: KForm) -> KForm:
        return self + (-other)

    def __mul__(self, s) -> KForm:
        if isinstance(s, KForm):
            return wedge(self, s)
        s = compact(as_scalar(s))
        if s == 0:
            return KForm.zero(self.dim, self.grade)
        return KForm(self.dim, self.grade, {m: compact(c * s) for m, c in self.terms.items()}, check=False)

    def __rmul__(self, s) -> KForm:
        return self * s

    def __xor__(self, other: KForm) -> KForm:
        return wedge(self, other)

    def scale(self, s) -> KForm:
        return self * s

    def star(self) -> KForm:
        return hodge_star(self)

    def plus_star(self) -> KForm:
        """``a + star(a)``, the shorthand used when listing self-dual forms."""
        return self + hodge_star(self)


def _accumulate(out: dict, m: int, v):
    w = out.get(m, 0) + v
    if w:
        out[m] = w
    else:
        out.pop(m, None)


def wedge(a: KForm, b: KForm) -> KForm:
    if a.dim != b.dim:
        raise DimMismatch(f"dimensions {a.dim} and {b.dim}")
    dim = a.dim
    g = a.grade + b.grade
    if g > dim or not a.terms or not b.terms:
        return KForm.zero(dim, min(g, dim) if g > dim else g)
    full = (1 << dim) - 1
    out: dict = {}
    bt = b.terms
    if g == dim:
        for ma, ca in a.terms.items():
            mb = full ^ ma
            cb = bt.get(mb)
            if cb is not None:
                _accumulate(out, full, merge_sign(ma, mb) * ca * cb)
        return KForm(dim, g, out, check=False)
    candidates = comb(dim - a.grade, b.grade)
    if candidates < len(bt):
        for ma, ca in a.terms.items():
            for mb in _submasks_of_size(full ^ ma, b.grade):
                cb = bt.get(mb)
                if cb is not None:
                    _accumulate(out, ma | mb, merge_sign(ma, mb) * ca * cb)
    else:
        for ma, ca in a.terms.items():
            for mb, cb in bt.items():
                if not ma & mb:
                    _accumulate(out, ma | mb, merge_sign(ma, mb) * ca * cb)
    return KForm(dim, g, out, check=False)


def wedge_square(a: KForm) -> KForm:
    """``a ^ a`` for an even-grade form, summing each unordered blade pair once."""
    if a.grade % 2:
        return KForm.zero(a.dim, min(2 * a.grade, a.dim))
    dim, g = a.dim, 2 * a.grade
    if g > dim or not a.terms:
        return KForm.zero(dim, min(g, dim))
    full = (1 << dim) - 1
    out: dict = {}
    at = a.terms
    use_candidates = comb(dim - a.grade, a.grade) < len(at)
    for ma, ca in at.items():
        if use_candidates or g == dim:
            pool = (full ^ ma,) if g == dim else _submasks_of_size(full ^ ma, a.grade)
            for mb in pool:
                if mb > ma:
                    cb = at.get(mb)
                    if cb is not None:
                        _accumulate(out, ma | mb, 2 * merge_sign(ma, mb) * ca * cb)
        else:
            for mb, cb in at.items():
                if mb > ma and not ma & mb:
                    _accumulate(out, ma | mb, 2 * merge_sign(ma, mb) * ca * cb)
    return KForm(dim, g, out, check=False)


def hodge_star(a: KForm) -> KForm:
    full = (1 << a.dim) - 1
    out = {}
    for m, c in a.terms.items():
        cm = full ^ m
        out[cm] = merge_sign(m, cm) * c
    return KForm(a.dim, a.dim - a.grade, out, check=False)


def evaluate(a: KForm, vectors) -> Fraction | int:
    """Value of ``a`` on ``k = a.grade`` vectors: sum of coeff * k x k minor."""
    vectors = [list(v) for v in vectors]
    if len(vectors) != a.grade:
        raise GradeMismatch(f"{a.grade}-form evaluated on {len(vectors)} vectors")
    if any(len(v) != a.dim for v in vectors):
        raise DimMismatch(f"vectors must have length {a.dim}")
    scale = 1
    cols = []
    for v in vectors:
        fv = [Fraction(x) for x in v]
        d = 1
        for x in fv:
            d = d * x.denominator // _gcd(d, x.denominator)
        scale *= d
        cols.append([int(x * d) for x in fv])
    rows_by_index = list(zip(*cols)) if cols else []
    total = 0
    for m, c in a.terms.items():
        idx = mask_indices(m)
        minor = det([rows_by_index[i - 1] for i in idx]) if idx else 1
        if minor:
            total += c * minor
    return compact(Fraction(total) / scale)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def pullback(a: KForm, A: ExactMatrix) -> KForm:
    """``A^* a``: the blade ``C`` pulls back to the wedge of rows ``C`` of ``A``.

    Partial wedge products are memoised on the row prefix, so blades sharing
    leading indices share work.
    """
    if A.n != a.dim or A.shape[1] != a.dim:
        raise DimMismatch(f"matrix of size {A.shape} against a form in dim {a.dim}")
    dim = a.dim
    row_forms = [
        KForm(dim, 1, {1 << j: x for j, x in enumerate(A.rows[i]) if x}, check=False) for i in range(dim)
    ]
    cache: dict[tuple, KForm] = {(): KForm.constant(dim, 1)}

    def prefix(idx: tuple) -> KForm:
        hit = cache.get(idx)
        if hit is None:
            hit = wedge(prefix(idx[:-1]), row_forms[idx[-1] - 1])
            cache[idx] = hit
        return hit

    out: dict = {}
    for idx, c in sorted((mask_indices(m), c) for m, c in a.terms.items()):
        for m, v in prefix(idx).terms.items():
            _accumulate(out, m, c * v)
    return KForm(dim, a.grade, out, check=False)


class FormMatrix:
    """Skew-symmetric d x d matrix of 2-forms, 1-based entry access."""

    def __init__(self, d: int, dim: int, upper: dict):
        """``upper`` maps (alpha, beta) with alpha < beta to a 2-form; missing entries are zero."""
        self.d = d
        self.dim = dim
        self._upper = {}
        for (i, j), f in upper.items():
            if not (1 <= i < j <= d):
                raise ValueError(f"entry ({i}, {j}) is not strictly upper triangular in size {d}")
            if f.dim != dim:
                raise DimMismatch(f"entry ({i}, {j}) lives in dim {f.dim}, expected {dim}")
            if f and f.grade != 2:
                raise GradeMismatch(f"entry ({i}, {j}) has grade {f.grade}")
            if f:
                self._upper[(i, j)] = f
        self._pf_cache: dict[tuple, KForm] = {}

    @classmethod
    def from_rows(cls, rows) -> FormMatrix:
        """Build from a full square array of 2-forms, checking skew-symmetry."""
        d = len(rows)
        dim = rows[0][0].dim
        upper = {}
        for i in range(d):
            if rows[i][i]:
                raise ValueError("diagonal entries must vanish")
            for j in range(i + 1, d):
                if rows[j][i] != -rows[i][j]:
                    raise ValueError(f"entries ({i + 1}, {j + 1}) and ({j + 1}, {i + 1}) are not opposite")
                upper[(i + 1, j + 1)] = rows[i][j]
        return cls(d, dim, upper)

    def entry(self, i: int, j: int) -> KForm:
        if i == j:
            return KForm.zero(self.dim, 2)
        if i < j:
            return self._upper.get((i, j), KForm.zero(self.dim, 2))
        return -self._upper.get((j, i), KForm.zero(self.dim, 2))

    def __getitem__(self, ij) -> KForm:
        return self.entry(*ij)

    def upper_entries(self):
        return [((i, j), self.entry(i, j)) for i in range(1, self.d + 1) for j in range(i + 1, self.d + 1)]

    def submatrix(self, subset) -> FormMatrix:
        s = list(subset)
        return FormMatrix(len(s), self.dim, {(a + 1, b + 1): self.entry(s[a], s[b]) for a in range(len(s)) for b in range(a + 1, len(s))})


def pfaffian_wedge(M: FormMatrix, subset=None) -> KForm:
    """Pfaffian of the principal submatrix on ``subset`` (1-based), products taken as wedges.

    Expansion along the first row; sub-Pfaffians are memoised on ``M``.
    """
    s = tuple(sorted(subset)) if subset is not None else tuple(range(1, M.d + 1))
    if len(s) % 2:
        raise OddSubset(f"Pfaffian of an odd-size index set {s}")
    return _pf(M, s)


def _pf(M: FormMatrix, s: tuple) -> KForm:
    hit = M._pf_cache.get(s)
    if hit is not None:
        return hit
    if not s:
        res = KForm.constant(M.dim, 1)
    else:
        first, rest = s[0], s[1:]
        res = KForm.zero(M.dim, len(s))
        for j, other in enumerate(rest):
            e = M.entry(first, other)
            if not e:
                continue
            sub = _pf(M, rest[:j] + rest[j + 1:])
            term = wedge(e, sub)
            res = res - term if j % 2 else res + term
    M._pf_cache[s] = res
    return res


def charpoly_coeff(M: FormMatrix, order: int) -> KForm:
    """Coefficient of ``t^(d - order)`` in ``det(tI - M)``: sum of squared Pfaffians of principal minors."""
    if order % 2:
        raise OddCoefficientRequested("odd coefficients of a skew matrix vanish and are not represented")
    if not 0 <= order <= M.d:
        raise ValueError(f"coefficient order {order} outside 0..{M.d}")
    grade = min(2 * order, M.dim)
    total: dict = {}
    for s in combinations(range(1, M.d + 1), order):
        sq = wedge_square(_pf(M, s)) if order else KForm.constant(M.dim, 1)
        for m, c in sq.terms.items():
            _accumulate(total, m, c)
    return KForm(M.dim, grade if order else 0, total, check=False)


def wedge_det(M: FormMatrix, subset) -> KForm:
    """Leibniz determinant of the principal submatrix with wedge products.

    Brute force over all permutations; used as an independent check of
    the Pfaffian route.
    """
    s = list(subset)
    k = len(s)
    out = KForm.zero(M.dim, min(2 * k, M.dim))
    for perm in permutations(range(k)):
        sign = permutation_sign(perm)
        term = KForm.constant(M.dim, sign)
        for r, c in enumerate(perm):
            term = wedge(term, M.entry(s[r], s[c]))
            if not term:
                break
        if term:
            out = out + term
    return out


def gram_rank(forms) -> int:
    """Rank of the Gram matrix with distinct blades orthonormal."""
    forms = list(forms)
    if not forms:
        return 0
    shapes = {(f.dim, f.grade) for f in forms if f}
    if len(shapes) > 1 or any(f.dim != forms[0].dim for f in forms):
        raise MixedShapes(f"forms have shapes {sorted(shapes)}")
    gram = [[sum(c * b.terms.get(m, 0) for m, c in a.terms.items()) for b in forms] for a in forms]
    return rank(gram)


# text rendering --------------------------------------------------------

def format_blade(indices, dim: int = 16) -> str:
    """``d`` followed by the indices; in dim 16, 9..16 print as 1'..8' after a ``|``."""
    if dim <= 8:
        return "d" + "".join(str(i) for i in indices)
    lo = "".join(str(i) for i in indices if i <= 8)
    hi = "".join(f"{i - 8}'" for i in indices if i > 8)
    return "d" + lo + ("|" if lo and hi else "") + hi


def format_coeff(c) -> str:
    c = compact(as_scalar(c))
    return f"+{c}" if c > 0 else str(c)


def format_form(a: KForm, sep: str = " ") -> str:
    return sep.join(f"{format_coeff(c)} {format_blade(idx, a.dim)}" for idx, c in a.items())


_TERM = re.compile(r"([+-])?\s*(\d+(?:/\d+)?)?\s*[·*]?\s*d([0-9'|]*)")


def parse_blade(text: str) -> tuple:
    """Indices in written order from ``"1456782'3'"`` / ``"145678|2'3'"`` (primes add 8)."""
    out = []
    for ch in text:
        if ch == "|":
            continue
        if ch == "'":
            out[-1] += 8
        else:
            out.append(int(ch))
    return tuple(out)


def parse_form(text: str, dim: int) -> KForm:
    """Parse ``"-2 d1456782'3' + d12"``-style text (coefficient defaults to 1)."""
    text = text.replace("−", "-").strip()
    pos = 0
    out = None
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse form near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else 1
        term = KForm.basis(dim, parse_blade(m.group(3)), sign * c)
        out = term if out is None else out + term
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if out is None:
        raise ValueError("empty form")
    return out
