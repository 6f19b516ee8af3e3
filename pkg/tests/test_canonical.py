import json

import pytest

from spin9forms import constants
from spin9forms.canonical import (
    classify_families,
    classify_monomial,
    emit_table,
    flat_lambda,
    load_table,
    reference_half,
    reference_table,
    spin7_form,
    spin9_form,
    table_diff,
    tau,
)
from spin9forms.errors import UnclassifiableMonomial, VerificationFailed
from spin9forms.exterior import KForm, blade_mask, parse_form
from spin9forms.verify import (
    Report,
    verify_algebra,
    verify_complex_identities,
    verify_families,
    verify_invariance,
    verify_quaternion_identities,
    verify_spin7_identities,
    verify_structures,
    verify_tau2,
)


def test_spin7_form():
    phi = spin7_form()
    assert phi.coeff((1, 2, 3, 4)) == 1
    assert phi.coeff((1, 2, 7, 8)) == -1
    assert phi == constants.spin7_reference()
    assert phi.star() == phi


def test_reference_table():
    assert len(reference_half()) == 351
    ref = reference_table()
    assert len(ref) == 702
    assert ref.coeff((1, 4, 5, 6, 7, 8, 10, 11)) == -2
    assert ref.star() == ref


def test_table_diff():
    phi = spin9_form()
    assert table_diff(phi).is_empty
    m = blade_mask((1, 4, 5, 6, 7, 8, 10, 11))
    bumped = KForm(16, 8, {**phi.terms, m: phi.terms[m] + 1})
    d = table_diff(bumped)
    assert len(d) == 1 and d.entries[0][0] == (1, 4, 5, 6, 7, 8, 10, 11)


def test_json_round_trip():
    text = emit_table(8, "json")
    rows = json.loads(text)
    assert len(rows) == 702
    assert table_diff(load_table(text)).is_empty


def test_emit_formats_deterministic():
    assert emit_table(4, "csv") == emit_table(4, "csv")
    assert emit_table(2, "text") == "+1 d12\n+1 d34\n# 2 terms, c = 2/π\n"
    raw = json.loads(emit_table(4, "json", raw=True))
    assert {"blade": [1, 2, 3, 4], "coeff": "1/20", "pi_power": 2} in raw


def test_tau_shape():
    assert tau(2).is_zero() and tau(6).is_zero()
    assert len(tau(4)) == 702
    assert tau(4).coeff(tuple(range(1, 9))) == -5040
    assert spin9_form() * 360 == tau(4)
    assert len(tau(8)) == 1


def test_lambda():
    assert flat_lambda() == -12


def test_classify_examples():
    assert classify_monomial(tuple(range(1, 9))) == (1, 14)
    assert classify_monomial((1, 2, 3, 4, 9, 10, 11, 12)) == (2, 2)
    assert classify_monomial((1, 2, 3, 5, 9, 10, 11, 13)) == (2, 1)
    with pytest.raises(UnclassifiableMonomial):
        classify_monomial((1, 2, 3, 4, 5, 9, 10, 11))


def test_census():
    c = classify_families(spin9_form())
    assert c.summary() == "2/70/70/336/28/28/84/84"
    assert c.total == 702 and not c.rule_violations
    assert c.magnitudes[1] == [14] and c.magnitudes[4] == [1]


@pytest.mark.parametrize(
    "suite",
    [verify_algebra, verify_structures, verify_spin7_identities, verify_quaternion_identities,
     verify_complex_identities, verify_tau2, verify_families],
)
def test_suites_pass(suite):
    assert suite().passed


def test_invariance_short():
    assert verify_invariance(trials=3, seed=5).passed


def test_invariance_detects_non_invariant_form():
    bad = KForm.basis(16, tuple(range(1, 9)))
    with pytest.raises(VerificationFailed):
        verify_invariance(bad + bad.star(), trials=3)


def test_report_raises_with_diff():
    r = Report("demo")
    with pytest.raises(VerificationFailed) as exc:
        r.same("x", parse_form("d12", 4), parse_form("d34", 4))
    assert exc.value.report is r and len(exc.value.diff) == 2
