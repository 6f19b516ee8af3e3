from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from spin9forms.linalg import ExactMatrix, det, rank


def _leibniz(rows):
    from itertools import permutations

    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        t = (-1) ** inv
        for i in range(n):
            t *= rows[i][p[i]]
        total += t
    return total


rats = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rats, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(rows):
    assert det(rows) == _leibniz(rows)


def test_rank_and_ops():
    A = ExactMatrix([[1, 2], [2, 4]])
    assert rank(A.rows) == 1
    assert ExactMatrix.identity(2).is_orthogonal()
    B = ExactMatrix([[0, 1], [-1, 0]])
    assert B.is_skew() and B @ B == -ExactMatrix.identity(2)
    assert (A * Fraction(1, 2))[1, 1] == 2
    assert A.T == A and A.is_symmetric()
    big = ExactMatrix.blocks([[A, B], [B, A]])
    assert big.shape == (4, 4) and big.block(1, 0, 2) == B
