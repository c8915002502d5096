import json
from math import factorial

import pytest

from stacklab import verify
from stacklab.tableau import hook_count, rectangle
from stacklab.verify import (
    DEFAULT_SWEEP,
    EXTENDED_SWEEP,
    VerifyReport,
    crossing_nesting_histogram,
    verify_cor_image,
    verify_thm_main,
    verify_thm_prom_rs,
)


@pytest.mark.parametrize("r,c", DEFAULT_SWEEP)
def test_default_sweep_passes(r, c):
    for fn in (verify_thm_prom_rs, verify_thm_main):
        report = fn(r, c)
        assert report.passed, report.failures[:3]
        assert report.pairs_checked == hook_count(rectangle(r, c)) ** 2


def test_report_formats():
    report = verify_thm_prom_rs(2, 3)
    assert report.summary() == f"prom-rs 2x3: 25 pairs, 0 failures [PASS]"
    data = json.loads(report.to_json())
    assert data["shape"] == "2x3" and data["pairs"] == 25 and data["failures"] == []


def test_failures_are_reported_with_witnesses(monkeypatch):
    monkeypatch.setattr(verify, "rs_inverse", lambda P, Q: ())
    report = verify_thm_prom_rs(2, 2)
    assert not report.passed
    assert len(report.failures) == 4
    assert report.failures[0]["clause"] == "prom-rs"
    assert "P" in report.failures[0] and "Q" in report.failures[0]
    assert "[FAIL]" in report.summary()


def test_main_checker_catches_wrong_viennot(monkeypatch):
    monkeypatch.setattr(verify, "viennot", lambda pts, d: None)
    report = verify_thm_main(2, 2)
    assert {f["clause"] for f in report.failures} == {"main-viennot"}


def test_sampling_is_seeded():
    a = verify_thm_main(3, 3, sample=50, seed=3)
    b = verify_thm_main(3, 3, sample=50, seed=3)
    assert a.pairs_checked == b.pairs_checked == 50
    assert a.passed and b.passed


def test_parallel_sweep_matches_serial():
    serial = verify_thm_main(2, 4)
    parallel = verify_thm_main(2, 4, workers=2)
    assert parallel.pairs_checked == serial.pairs_checked
    assert parallel.failures == serial.failures == []


def test_pair_cap():
    with pytest.raises(ValueError):
        verify_thm_prom_rs(5, 5)


@pytest.mark.parametrize("n", range(1, 7))
def test_histogram_totals(n):
    hist = crossing_nesting_histogram(n)
    assert sum(hist.values()) == factorial(n)
    for (cr, ne), count in hist.items():
        assert cr * ne >= n or count == 0


@pytest.mark.parametrize("r,c", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1), (2, 3), (3, 2)])
def test_image_characterisation(r, c):
    report = verify_cor_image(r, c)
    assert report.passed, report.failures[:3]
    assert report.objects_checked == factorial(r * c)


def test_image_cap():
    with pytest.raises(ValueError):
        verify_cor_image(3, 3)


@pytest.mark.extended
@pytest.mark.parametrize("r,c", EXTENDED_SWEEP)
def test_extended_sweep(r, c):
    for fn in (verify_thm_prom_rs, verify_thm_main):
        report = fn(r, c)
        assert report.passed and report.pairs_checked == 462 ** 2


def test_empty_report_passes():
    assert VerifyReport("prom-rs", (1, 1)).passed


def test_small_shape_examples():
    from stacklab.promperms import prom_perms
    from stacklab.tableau import stack, enumerate_syt

    (row,) = enumerate_syt(rectangle(1, 2))
    rho = prom_perms(stack(row, row))[0]
    assert [v - 2 for v in rho[:2]] == [2, 1]
    assert verify_thm_prom_rs(1, 2).passed
    report = verify_cor_image(2, 2)
    assert report.pairs_checked == 4 and report.objects_checked == 24
    assert crossing_nesting_histogram(4)[(2, 2)] == 4
    assert crossing_nesting_histogram(3)[(1, 3)] == 1


def test_worked_pair_spot_check():
    from fixtures import P_FIG, Q_FIG

    assert verify.check_prom_rs(P_FIG, Q_FIG) == []
    tabs = [P_FIG, Q_FIG]
    assert verify._MainChecker(tabs).check(0, 1) == []
