import pytest

from fibcomp import verify
from fibcomp.core import DomainError


def run(name, max_n):
    results = verify.verify_suite(name, max_n)
    assert results, f"suite {name} produced no checks"
    return results


@pytest.mark.parametrize(
    "name,max_n",
    [("codec", 9), ("bijection", 10), ("counts", 14), ("genfun", 14), ("analytic", 8)],
)
def test_suites_pass_at_small_bounds(name, max_n):
    for result in run(name, max_n):
        assert result.passed, f"{name}:{result.name}: {result.detail}"
        assert result.name
        assert result.detail


def test_suite_names_cover_all_suites():
    assert set(verify.suite_names()) == {"codec", "bijection", "counts", "genfun", "analytic"}


def test_unknown_suite_rejected():
    with pytest.raises(DomainError):
        verify.verify_suite("quantum", 5)


def test_failure_reports_counterexample(monkeypatch):
    # break one counter and confirm the suite pinpoints the smallest witness
    from fibcomp import counting

    real = counting.c_count

    def wrong(n):
        return real(n) + (1 if n == 7 else 0)

    monkeypatch.setattr(verify.counting, "c_count", wrong)
    results = verify.verify_suite("counts", 12)
    failed = [r for r in results if not r.passed]
    assert failed
    assert any("7" in r.detail for r in failed)
