"""The canonical invariant forms, the reference 8-form table and its census.

``spin9_form`` is the normalised octonionic line integral; ``tau`` gives the
coefficients of the characteristic polynomial of the Spin(9) Kaehler matrix.
The reference table is shipped as ``data/table1.json`` (one half of the
self-dual form; the other half is its Hodge star).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .berger import berger_form
from .cayley import Octonion, double_cross, is_cayley_quadruple
from .errors import GradeMismatch, UnclassifiableMonomial
from .exterior import KForm, blade_mask, charpoly_coeff, format_blade, format_coeff, mask_indices
from .hopf import StructureFamily, kahler_matrix
from .scalars import ScaledScalar

VOLUME_16 = tuple(range(1, 17))


def spin7_form() -> KForm:
    """``sum_{a<b<c<d} <e_a, e_b x e_c x e_d> dx_abcd`` on R^8."""
    units = [Octonion.unit(i) for i in range(1, 9)]
    terms = {}
    for a, b, c, d in combinations(range(8), 4):
        v = double_cross(units[b], units[c], units[d]).coords[a]
        if v:
            terms[blade_mask((a + 1, b + 1, c + 1, d + 1))] = v
    return KForm(8, 4, terms)


def psi_matrix():
    """The 9x9 skew matrix of Spin(9) Kaehler 2-forms on R^16."""
    return kahler_matrix(StructureFamily.SPIN9).matrix


@lru_cache(maxsize=None)
def tau(order: int) -> KForm:
    """``tau_order(psi)`` (order even), the coefficient of ``t^(9 - order)`` in ``det(tI - psi)``."""
    return charpoly_coeff(psi_matrix(), order)


def spin9_form() -> KForm:
    return berger_form(8).normalized


# -- reference table ------------------------------------------------------


def load_table(text: str, dim: int = 16) -> KForm:
    """Parse a JSON table (list of ``{"blade": [...], "coeff": int}``)."""
    rows = json.loads(text)
    if not rows:
        raise ValueError("empty table")
    grade = len(rows[0]["blade"])
    out = KForm.zero(dim, grade)
    for row in rows:
        out = out + KForm.basis(dim, row["blade"], row["coeff"])
    return out


@lru_cache(maxsize=1)
def reference_half() -> KForm:
    text = resources.files("spin9forms").joinpath("data/table1.json").read_text()
    return load_table(text)


def reference_table() -> KForm:
    """The 351 listed entries plus their Hodge stars."""
    return reference_half().plus_star()


@dataclass
class TableDiff:
    entries: list = field(default_factory=list)  # (indices, computed, expected)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def lines(self, limit: int | None = None) -> list[str]:
        rows = self.entries if limit is None else self.entries[:limit]
        return [f"{format_blade(b)}: computed {c}, expected {e}" for b, c, e in rows]


def form_diff(computed: KForm, expected: KForm) -> TableDiff:
    """Every blade where the two forms disagree, sorted by blade."""
    if (computed.dim, computed.grade) != (expected.dim, expected.grade):
        raise GradeMismatch(
            f"cannot compare a {computed.grade}-form on R^{computed.dim} with a {expected.grade}-form on R^{expected.dim}"
        )
    masks = set(computed.terms) | set(expected.terms)
    rows = []
    for m in masks:
        c, e = computed.terms.get(m, 0), expected.terms.get(m, 0)
        if c != e:
            rows.append((mask_indices(m), c, e))
    rows.sort()
    return TableDiff(rows)


def table_diff(computed: KForm, reference: KForm | None = None) -> TableDiff:
    return form_diff(computed, reference_table() if reference is None else reference)


# -- census ---------------------------------------------------------------


@dataclass
class FamilyCensus:
    counts: dict  # family number -> count
    magnitudes: dict  # family number -> sorted list of distinct |coeff|
    rule_violations: list  # (indices, coeff, family, expected magnitude)
    cayley: dict  # family number -> monomials of Cayley type (families 2, 3)

    def summary(self) -> str:
        return "/".join(str(self.counts.get(f, 0)) for f in range(1, 9))

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _split(indices):
    u = frozenset(i for i in indices if i <= 8)
    p = frozenset(i - 8 for i in indices if i > 8)
    return u, p


def _cayley(s) -> bool:
    return len(s) == 4 and is_cayley_quadruple(sorted(s))


def classify_monomial(indices) -> tuple[int, int]:
    """Family number (1..8) and expected coefficient magnitude of a blade."""
    u, p = _split(indices)
    nu, np_ = len(u), len(p)
    if (nu, np_) in ((8, 0), (0, 8)):
        return 1, 14
    if nu == 4 and np_ == 4:
        common = u & p
        if len(common) == 4:
            return 2, 2 if _cayley(u) else 1
        if not common:
            return 3, 2 if _cayley(u) else 1
        if len(common) == 2 and not _cayley(u):
            # the two extra primed indices are double cross products
            (al, be), (a, b) = sorted(common), sorted(u - p)
            extra = p - u
            ga = {_cross_index(al, be, a), _cross_index(al, be, b)}
            if ga == extra:
                return 4, 1
    if nu == 6 and np_ == 2:
        if not (p & u):
            return 5, 2
        if p <= u and _cayley(u - p):
            return 7, 2
    if nu == 2 and np_ == 6:
        if not (u & p):
            return 6, 2
        if u <= p and _cayley(p - u):
            return 8, 2
    raise UnclassifiableMonomial(f"{format_blade(indices)} fits none of the eight families")


def _cross_index(a: int, b: int, c: int) -> int:
    v = double_cross(Octonion.unit(a), Octonion.unit(b), Octonion.unit(c)).coords
    nz = [i + 1 for i, x in enumerate(v) if x]
    if len(nz) != 1:
        raise UnclassifiableMonomial(f"e{a} x e{b} x e{c} is not a basis vector")
    return nz[0]


def classify_families(phi: KForm) -> FamilyCensus:
    if (phi.dim, phi.grade) != (16, 8):
        raise GradeMismatch("family census applies to 8-forms on R^16")
    counts: dict = {}
    mags: dict = {}
    bad = []
    cayley = {2: 0, 3: 0}
    for idx, c in phi.items():
        fam, mag = classify_monomial(idx)
        counts[fam] = counts.get(fam, 0) + 1
        if fam in cayley and mag == 2:
            cayley[fam] += 1
        mags.setdefault(fam, set()).add(abs(c))
        if abs(c) != mag:
            bad.append((idx, c, fam, mag))
    return FamilyCensus(
        {f: counts.get(f, 0) for f in range(1, 9)},
        {f: sorted(mags.get(f, ())) for f in range(1, 9)},
        bad,
        cayley,
    )


# -- emission -------------------------------------------------------------


def _algebra_dim(dim: int) -> int:
    if dim not in (2, 4, 8):
        raise ValueError("dim must be 2, 4 or 8 (the division algebra dimension)")
    return dim


def emit_table(dim: int, fmt: str = "text", raw: bool = False) -> str:
    res = berger_form(_algebra_dim(dim))
    ambient = 2 * dim
    if raw:
        rows = sorted((mask_indices(m), v) for m, v in res.raw.items())
    else:
        rows = res.normalized.items()
    if fmt == "json":
        out = []
        for b, c in rows:
            if raw:
                out.append({"blade": list(b), "coeff": str(c.value), "pi_power": c.pi_power})
            else:
                out.append({"blade": list(b), "coeff": int(c)})
        return "[\n" + ",\n".join(json.dumps(r) for r in out) + "\n]\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["blade", "coeff"])
        for b, c in rows:
            w.writerow([format_blade(b, ambient), str(c)])
        return buf.getvalue()
    if fmt == "text":
        lines = [f"{str(c) if raw else format_coeff(c)} {format_blade(b, ambient)}" for b, c in rows]
        lines.append(f"# {len(rows)} terms, c = {res.constant_c}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def flat_lambda() -> Fraction:
    """``lambda`` with ``tau4 ^ tau4 = lambda * tau8`` on R^16."""
    t4, t8 = tau(4), tau(8)
    sq = t4 ^ t4
    return Fraction(sq.coeff(VOLUME_16)) / t8.coeff(VOLUME_16)


def raw_over_tau4() -> ScaledScalar:
    """The scalar ``k`` with raw line integral ``= k * tau4(psi)``."""
    res = berger_form(8)
    m = blade_mask(tuple(range(1, 9)))
    return ScaledScalar(Fraction(res.raw[m].value) / tau(4).terms[m], res.pi_power)
