import pytest

from nullsolve.apps.selftest.checks import check_kappa_example, run_checks


def test_single_check():
    results = run_checks(seed=0, only=["kappa_example"])
    assert [r.name for r in results] == ["kappa_example"]
    assert results[0].passed


def test_kappa_example_detail():
    assert "56" in check_kappa_example(None)


@pytest.mark.slow
def test_all_checks_pass():
    results = run_checks(seed=0)
    assert [r.name for r in results if not r.passed] == []
