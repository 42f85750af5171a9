from fractions import Fraction as F

import pytest

from sylvester.arith import phi_bar, sylvester
from sylvester.errors import InvalidArgumentError, PrimeRangeError, ResourceLimitError
from sylvester.pipeline import ChunkScheduler
from sylvester.primorial import (
    check_phi_bar_minimality,
    check_sylvester_maximality,
    limit_diagnostics,
    primorial_table,
)


def test_primorial_records(small_table):
    records = primorial_table(3, small_table)
    assert [(r.index, r.value, r.phi_bar, r.sylvester) for r in records] == [
        (1, 2, F(1, 2), 1),
        (2, 6, F(1, 3), 2),
        (3, 30, F(4, 15), F(8, 3)),
    ]


def test_records_match_direct_evaluation(small_table):
    for r in primorial_table(7, small_table):
        assert r.phi_bar == phi_bar(r.value, small_table)
        assert r.sylvester == sylvester(r.value, small_table)
    records = primorial_table(40, small_table)
    for a, b in zip(records, records[1:]):
        assert b.value == a.value * small_table.nth_prime(b.index)


def test_phi_bar_minimality_exhaustive(small_table):
    scheduler = ChunkScheduler(threads=4, chunk_size=50_000)
    for n in range(2, 8):
        verdict = check_phi_bar_minimality(n, small_table, scheduler=scheduler)
        assert verdict.passed and verdict.exhaustive
        assert verdict.counterexample is None
    verdict = check_phi_bar_minimality(3, small_table)
    assert verdict.checked == 29
    assert check_phi_bar_minimality(4, small_table).checked == 209


def test_sylvester_maximality_exhaustive(small_table):
    scheduler = ChunkScheduler(threads=4, chunk_size=50_000)
    for n in range(2, 8):
        verdict = check_sylvester_maximality(n, small_table, scheduler=scheduler)
        assert verdict.passed and verdict.exhaustive, verdict.render()


def test_sylvester_equality_case(small_table):
    assert sylvester(15, small_table) == sylvester(30, small_table) == F(8, 3)
    assert sylvester(3, small_table) == sylvester(6, small_table) == 2
    assert max(sylvester(m, small_table) for m in range(1, 30) if m != 15) < F(8, 3)
    assert {sylvester(m, small_table) for m in (1, 2, 4, 5)} == {1, F(4, 3)}


def test_render(small_table):
    line = check_phi_bar_minimality(3, small_table).render()
    assert line == "check=phi n=3 P=30 exhaustive checked=29 passed=true"


def test_budget_enforced(small_table):
    with pytest.raises(ResourceLimitError):
        check_phi_bar_minimality(8, small_table)
    with pytest.raises(ResourceLimitError):
        check_sylvester_maximality(3, small_table, exhaustive_max=2)
    with pytest.raises(InvalidArgumentError):
        check_phi_bar_minimality(0, small_table)


def test_sampled_mode(small_table):
    verdict = check_sylvester_maximality(3, small_table, samples=20, seed=1, exhaustive_max=2)
    assert verdict.passed and not verdict.exhaustive
    assert 0 < verdict.checked <= 20
    again = check_sylvester_maximality(3, small_table, samples=20, seed=1, exhaustive_max=2)
    assert again == verdict
    with pytest.raises(PrimeRangeError):
        # P_8 = 9699690 lies beyond the table
        check_phi_bar_minimality(8, small_table, samples=100)


def test_limit_diagnostics(small_table):
    diagnostics = limit_diagnostics(100, small_table)
    assert diagnostics.phi_bar_decreasing
    assert diagnostics.sylvester_increasing
    rows = diagnostics.rows()
    assert rows[3][2] / rows[2][2] == pytest.approx(6 / 5)
    assert rows[0] == (1, 0.5, 1.0)


def test_limit_diagnostics_at_scale(small_table):
    n = small_table.prime_count
    diagnostics = limit_diagnostics(n, small_table)
    assert diagnostics.phi_bar[-1] < 0.05
    assert diagnostics.sylvester[-1] > 5
    with pytest.raises(PrimeRangeError):
        limit_diagnostics(n + 1, small_table)
