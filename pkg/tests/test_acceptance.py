"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the terminal
summary (see conftest.py) and by ``python3 tests/test_acceptance.py``.
"""

import contextlib
import math
import random
from fractions import Fraction
from itertools import combinations

from spin9forms import constants
from spin9forms.berger import berger_form, moment
from spin9forms.canonical import classify_families, flat_lambda, spin7_form, spin9_form, table_diff, tau
from spin9forms.exterior import (
    FormMatrix,
    KForm,
    blade_mask,
    charpoly_coeff,
    gram_rank,
    pfaffian_wedge,
    wedge_det,
    wedge_square,
)
from spin9forms.hopf import kahler_form, spin7_two_forms
from spin9forms.linalg import ExactMatrix, det
from spin9forms.scalars import LCG, ScaledScalar
from spin9forms.verify import (
    verify_complex_identities,
    verify_invariance,
    verify_quaternion_identities,
    verify_spin7_identities,
    verify_structures,
    verify_tau2,
)

RESULTS: dict = {}

TITLES = {
    1: "Table reproduction (702 terms, anchor -14, c = -110880/pi^4)",
    2: "360 Phi = tau4(psi) on 12870 blades, tau4 anchor -5040",
    3: "tau2 = tau6 = 0, tau8 on the volume form, seven grouped sums",
    4: "Spin(7) suite",
    5: "quaternionic and complex suites",
    6: "structure algebra",
    7: "invariance under 20 rational generators",
    8: "family census 2/70/70/336/28/28/84/84",
    9: "oracle checks (moments, charpoly, Pfaffian)",
    10: "flat-model lambda report",
}


@contextlib.contextmanager
def criterion(n: int, detail: str = ""):
    try:
        yield
    except BaseException:
        RESULTS[n] = f"criterion {n}: FAIL  {TITLES[n]}"
        raise
    RESULTS[n] = f"criterion {n}: PASS  {TITLES[n]}" + (f"  [{detail}]" if detail else "")


def test_criterion_01_table():
    with criterion(1):
        res = berger_form(8)
        assert len(res.normalized) == 702
        assert table_diff(res.normalized).is_empty
        assert res.normalized.coeff(tuple(range(1, 9))) == -14
        assert res.constant_c == ScaledScalar(Fraction(-110880), -4)


def test_criterion_02_main_theorem():
    with criterion(2):
        phi, t4 = spin9_form(), tau(4)
        masks = set(phi.terms) | set(t4.terms)
        assert all(360 * phi.terms.get(m, 0) == t4.terms.get(m, 0) for m in masks)
        # every other grade-8 blade is zero on both sides
        assert len(masks) == 702
        assert t4.coeff(tuple(range(1, 9))) == -5040


def test_criterion_03_charpoly_shape():
    with criterion(3):
        assert tau(2).is_zero()
        assert tau(6).is_zero()
        t8 = tau(8)
        assert list(t8.terms) == [blade_mask(range(1, 17))] and t8.coeff(tuple(range(1, 17))) != 0
        assert verify_tau2().passed


def test_criterion_04_spin7():
    with criterion(4):
        assert spin7_form() == constants.spin7_reference()
        assert verify_spin7_identities().passed
        phi, phi21 = spin7_two_forms()
        assert gram_rank(list(phi.values())) == 7
        assert gram_rank(list(phi21.values())) == 21


def test_criterion_05_quaternion_complex():
    with criterion(5):
        assert verify_quaternion_identities().passed
        assert verify_complex_identities().passed


def test_criterion_06_structures():
    with criterion(6):
        assert verify_structures().passed


def test_criterion_07_invariance():
    with criterion(7, "20 generators, seed 1"):
        rep = verify_invariance(spin9_form(), trials=20, seed=1)
        assert sum(c.name.startswith("invariant") for c in rep.checks) == 20
        assert rep.passed


def test_criterion_08_families():
    with criterion(8):
        c = classify_families(spin9_form())
        assert [c.counts[f] for f in range(1, 9)] == [2, 70, 70, 336, 28, 28, 84, 84]
        assert c.total == 702
        assert c.cayley == {2: 14, 3: 14}
        assert not c.rule_violations


def _moment_quadrature(a, N):
    from scipy import integrate

    def inner(t, k):
        return 2 * integrate.quad(lambda m: m ** (2 * k) * math.exp(-t * m * m), 0, math.inf,
                                  epsabs=0, epsrel=1e-13, limit=200)[0]

    def outer(t):
        p = t ** (N - 1) * math.exp(-t)
        for k in a:
            p *= inner(t, k)
        return p

    return integrate.quad(outer, 0, math.inf, epsabs=0, epsrel=1e-12, limit=200)[0] / math.gamma(N)


def test_criterion_09_oracles():
    with criterion(9, "20 moments, 12 form matrices, 20 Pfaffians"):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.choice((2, 4, 6, 8))
            a = [rng.randint(0, 2) for _ in range(n)]
            N = n // 2 + sum(a) + rng.randint(1, 4)
            exact = float(moment(a, N))
            assert abs(_moment_quadrature(a, N) - exact) / exact < 1e-9
        lcg = LCG(3)
        blades = list(combinations(range(1, 9), 2))
        for d in (2, 3, 4, 5) * 3:
            upper = {}
            for i, j in combinations(range(1, d + 1), 2):
                f = KForm.zero(8, 2)
                for _ in range(lcg.randint(0, 3)):
                    f = f + KForm.basis(8, blades[lcg.randint(0, 27)], lcg.randint(-3, 3))
                upper[(i, j)] = f
            M = FormMatrix(d, 8, upper)
            for order in range(2, d + 1, 2):
                brute = KForm.zero(8, 2 * order)
                for s in combinations(range(1, d + 1), order):
                    brute = brute + wedge_det(M, s)
                assert charpoly_coeff(M, order) == brute
        for _ in range(20):
            n = lcg.randint(1, 3) * 2
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i, j in combinations(range(n), 2):
                x = lcg.rational(9)
                rows[i][j], rows[j][i] = x, -x
            # scalar Pfaffian via omega_A^k / k! = Pf(A) vol
            A = ExactMatrix(rows)
            vol = tuple(range(1, n + 1))
            w = kahler_form(A) if any(any(r) for r in rows) else KForm.zero(n, 2)
            p = KForm.constant(n, 1)
            for _ in range(n // 2):
                p = p ^ w
            pf = Fraction(p.coeff(vol)) / math.factorial(n // 2)
            assert pf * pf == det(rows)
        # wedge Pfaffian squared against the Leibniz determinant
        M = FormMatrix(4, 8, {(1, 2): KForm.basis(8, (1, 2)), (3, 4): KForm.basis(8, (3, 4)) * 2,
                              (1, 3): KForm.basis(8, (5, 6)), (2, 4): KForm.basis(8, (7, 8))})
        assert wedge_square(pfaffian_wedge(M)) == wedge_det(M, (1, 2, 3, 4))


def test_criterion_10_lambda():
    lam = flat_lambda()
    with criterion(10, f"lambda = {lam}, cohomological prediction 12"):
        assert isinstance(lam, Fraction) and lam.denominator == 1
        t4, t8 = tau(4), tau(8)
        assert (t4 ^ t4) == t8 * lam


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion")):
        try:
            fn()
        except Exception:
            failed += 1
    for n in sorted(RESULTS):
        print(RESULTS[n])
    sys.exit(1 if failed else 0)
