import pytest

from icefock.hat_tables import KNOWN_MISPRINTS, cases_exhaustive, four_terms, replay, verify_tables


@pytest.mark.parametrize("n", [2, 3])
def test_only_pinned_rows_differ(n):
    reports = replay(n)
    bad = {(r.case, r.index + 1) for r in reports if not r.matches}
    assert bad == set(KNOWN_MISPRINTS)
    assert all(r.to_json()["four_term_identity"] for r in reports)


@pytest.mark.parametrize("n", [2, 3])
def test_verify_tables(n):
    rep = verify_tables(n)
    assert rep["status"] == "pass"
    assert (rep["literal_rows_reproduced"], rep["literal_rows"]) == (29, 32)


def test_alternate_key_order_is_worse():
    assert sum(not r.matches for r in replay(2, "alternate")) > sum(not r.matches for r in replay(2))


def test_first_row():
    row = replay(2)[0].to_json()
    assert row["label"] == "++++"
    assert row["computed"] == ["z1^2", "-z1^2", "0", "0"]
    assert row["computed"] == row["printed"]


def test_windows_outside_cases_vanish():
    rep = cases_exhaustive(2)
    assert rep["nonzero_outside"] == [] and rep["split_right_edges"] == []


def test_four_terms_all_plus():
    assert four_terms(2, "+++", "+++").holds()
