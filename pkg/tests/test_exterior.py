from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spin9forms.errors import GradeMismatch, MixedShapes, OddCoefficientRequested, OddSubset
from spin9forms.exterior import (
    FormMatrix,
    KForm,
    blade_mask,
    charpoly_coeff,
    evaluate,
    format_blade,
    format_form,
    gram_rank,
    hodge_star,
    merge_sign,
    parse_form,
    pfaffian_wedge,
    pullback,
    wedge,
    wedge_det,
    wedge_square,
)
from spin9forms.hopf import kahler_form
from spin9forms.linalg import ExactMatrix, det

coeffs = st.integers(-3, 3)


def forms(dim, grade, max_terms=6):
    blades = list(combinations(range(1, dim + 1), grade))
    return st.dictionaries(st.sampled_from(blades), coeffs, max_size=max_terms).map(
        lambda d: KForm(dim, grade, {blade_mask(b): c for b, c in d.items()})
    )


def skew_matrices(n, height=5):
    return st.lists(st.integers(-height, height), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda v: _skew(n, v)
    )


def _skew(n, v):
    it = iter(v)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = Fraction(next(it), 3)
            rows[i][j], rows[j][i] = x, -x
    return ExactMatrix(rows)


def test_basis_sign_and_coeff():
    a = KForm.basis(4, (2, 1))
    assert a.coeff((1, 2)) == -1
    assert a.coeff((2, 1)) == 1
    assert KForm.basis(4, (1, 1)) == 0


def test_merge_sign():
    assert merge_sign(blade_mask((2,)), blade_mask((1,))) == -1
    assert merge_sign(blade_mask((1, 3)), blade_mask((2, 4))) == -1


def test_wedge_example():
    dx = [KForm.basis(4, (i,)) for i in range(1, 5)]
    assert (dx[0] ^ dx[1]) == KForm.basis(4, (1, 2))
    assert (dx[1] ^ dx[0]) == KForm.basis(4, (1, 2)) * -1
    assert (dx[0] ^ dx[0]) == 0


@settings(max_examples=40)
@given(forms(6, 1), forms(6, 2), forms(6, 2))
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(forms(6, 2), forms(6, 3))
def test_graded_commutativity(a, b):
    assert wedge(a, b) == wedge(b, a) * (-1) ** (a.grade * b.grade)


@given(forms(6, 2))
def test_wedge_square_matches_wedge(a):
    assert wedge_square(a) == wedge(a, a)


@given(st.integers(0, 6).flatmap(lambda k: forms(6, k)))
def test_star_star(a):
    assert hodge_star(hodge_star(a)) == a * (-1) ** (a.grade * (6 - a.grade))


def test_star_volume():
    assert hodge_star(KForm.constant(4, 1)) == KForm.basis(4, (1, 2, 3, 4))
    assert hodge_star(KForm.basis(4, (1, 3))) == KForm.basis(4, (2, 4)) * -1


def test_format_and_parse():
    a = parse_form("-2 d1456782'3' +d12345678", 16)
    assert a == KForm.basis(16, (1, 4, 5, 6, 7, 8, 10, 11), -2) + KForm.basis(16, tuple(range(1, 9)))
    assert format_blade((1, 4, 5, 6, 7, 8, 10, 11)) == "d145678|2'3'"
    assert parse_form(format_form(a), 16) == a
    assert parse_form(format_form(KForm.basis(16, (1, 9, 16), 3)), 16) == KForm.basis(16, (1, 9, 16), 3)


def test_shape_errors():
    with pytest.raises(GradeMismatch):
        KForm.basis(4, (1,)) + KForm.basis(4, (1, 2))
    with pytest.raises(MixedShapes):
        gram_rank([KForm.basis(4, (1,)), KForm.basis(4, (1, 2))])


def test_evaluate_basis():
    a = KForm.basis(3, (1, 2))
    assert evaluate(a, [[1, 0, 0], [0, 1, 0]]) == 1
    assert evaluate(a, [[0, 1, 0], [1, 0, 0]]) == -1


@settings(max_examples=25)
@given(forms(5, 3), st.lists(st.integers(-3, 3), min_size=25, max_size=25), st.data())
def test_pullback_evaluate(a, entries, data):
    A = ExactMatrix([entries[5 * i:5 * i + 5] for i in range(5)])
    vs = [data.draw(st.lists(st.integers(-4, 4), min_size=5, max_size=5)) for _ in range(3)]
    lhs = evaluate(pullback(a, A), vs)
    rhs = evaluate(a, [A.apply(v) for v in vs])
    assert lhs == rhs


@given(st.sampled_from([2, 4, 6]).flatmap(skew_matrices))
def test_pf_squared_is_det_scalar(A):
    n = A.n
    k = n // 2
    w = kahler_form(A) if A.is_skew() and any(any(r) for r in A.rows) else KForm.zero(n, 2)
    power = KForm.constant(n, 1)
    for _ in range(k):
        power = power ^ w
    pf = Fraction(power.coeff(tuple(range(1, n + 1)))) / factorial(k)
    assert pf * pf == det(A.rows)


def _random_form_matrix(d, dim, data):
    upper = {}
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            upper[(i, j)] = data.draw(forms(dim, 2, max_terms=3))
    return FormMatrix(d, dim, upper)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.data())
def test_charpoly_vs_wedge_det(d, data):
    M = _random_form_matrix(d, 8, data)
    for order in range(0, d + 1, 2):
        brute = KForm.zero(8, 2 * order)
        for s in combinations(range(1, d + 1), order):
            brute = brute + wedge_det(M, s)
        assert charpoly_coeff(M, order) == brute


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 4]), st.data())
def test_pf_squared_is_wedge_det(d, data):
    M = _random_form_matrix(d, 8, data)
    full = tuple(range(1, d + 1))
    assert wedge_square(pfaffian_wedge(M)) == wedge_det(M, full)


def test_pfaffian_errors():
    M = FormMatrix(3, 4, {(1, 2): KForm.basis(4, (1, 2))})
    with pytest.raises(OddSubset):
        pfaffian_wedge(M)
    with pytest.raises(OddCoefficientRequested):
        charpoly_coeff(M, 1)


def test_pfaffian_4x4():
    e = lambda *i: KForm.basis(8, i)
    M = FormMatrix(4, 8, {(1, 2): e(1, 2), (3, 4): e(3, 4), (1, 3): e(5, 6), (2, 4): e(7, 8)})
    assert pfaffian_wedge(M) == e(1, 2, 3, 4) - e(5, 6, 7, 8)


def test_gram_rank():
    a, b = KForm.basis(4, (1, 2)), KForm.basis(4, (3, 4))
    assert gram_rank([a, b, a + b]) == 2
