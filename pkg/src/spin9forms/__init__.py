"""Exact octonionic algebra, exterior forms and the invariant forms of the Hopf-type geometries."""

__version__ = "0.1.0"

from .berger import BergerResult, berger_form, line_coframe, moment
from .canonical import classify_families, reference_table, spin7_form, spin9_form, table_diff, tau
from .cayley import Octonion, Quaternion, associator, cross, double_cross, is_cayley_quadruple, omul
from .exterior import FormMatrix, KForm, charpoly_coeff, evaluate, hodge_star, pfaffian_wedge, pullback, wedge
from .hopf import StructureFamily, generator, involution, kahler_form, kahler_matrix

__all__ = [
    "BergerResult",
    "FormMatrix",
    "KForm",
    "Octonion",
    "Quaternion",
    "StructureFamily",
    "associator",
    "berger_form",
    "charpoly_coeff",
    "classify_families",
    "cross",
    "double_cross",
    "evaluate",
    "generator",
    "hodge_star",
    "involution",
    "is_cayley_quadruple",
    "kahler_form",
    "kahler_matrix",
    "line_coframe",
    "moment",
    "omul",
    "pfaffian_wedge",
    "pullback",
    "reference_table",
    "spin7_form",
    "spin9_form",
    "table_diff",
    "tau",
    "wedge",
]
