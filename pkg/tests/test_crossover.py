import pytest

from sylvester.comet import (
    CLAIM_HI,
    CLAIM_LO,
    LAST_VIOLATION_BELOW_CLAIM,
    VIOLATIONS_BELOW_CLAIM,
    crossover_scan,
    ratio_summary,
    twin_prime_constant,
    verify_crossover_claim,
)
from sylvester.errors import ReproductionError
from sylvester.pipeline import ChunkScheduler
from sylvester.primes import build_table, prime_limit_for_count
from sylvester.violation import ViolationReport

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def claim_c():
    # the same 10**6 odd primes the CLI uses by default
    table = build_table(prime_limit_for_count(1_000_001))
    return twin_prime_constant(1_000_000, table).value


def test_no_violation_on_published_range(comet_table, comet_counts, claim_c):
    scheduler = ChunkScheduler(threads=4)
    violations = crossover_scan(
        CLAIM_LO, CLAIM_HI, claim_c, comet_table, counts=comet_counts, scheduler=scheduler
    )
    assert violations == []
    verify_crossover_claim(claim_c, comet_table, counts=comet_counts, scheduler=scheduler)


def test_violations_below_published_range(comet_table, comet_counts, claim_c):
    report = ViolationReport(
        crossover_scan(3, CLAIM_LO - 1, claim_c, comet_table, counts=comet_counts)
    )
    assert len(report) == VIOLATIONS_BELOW_CLAIM
    assert report.violations[0].n == 3
    assert report.max_violation_n == LAST_VIOLATION_BELOW_CLAIM
    assert [v.n for v in report.violations[-5:]] == [48634, 49549, 56752, 62956, 72064]
    last = report.violations[-1]
    assert last.sylvester == pytest.approx(1.00178, abs=1e-5)
    assert last.big_g == pytest.approx(0.98750, abs=1e-5)
    assert report.summary_line() == "violations=770 max_violation_n=72064"


def test_claim_check_reports_rows(comet_table, comet_counts, claim_c):
    with pytest.raises(ReproductionError) as excinfo:
        verify_crossover_claim(claim_c, comet_table, counts=comet_counts, n_lo=3, n_hi=1000)
    assert excinfo.value.rows
    assert excinfo.value.rows[0].n == 3


def test_g_over_s_mean_near_top(comet_table, comet_counts, claim_c):
    summary = ratio_summary(1_900_000, 2_000_000, claim_c, comet_table, counts=comet_counts)
    assert 1.0 <= summary.mean_g_over_s <= 1.1
