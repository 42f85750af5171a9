import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylvester.arith import totient
from sylvester.errors import FormulaDomainError, InvalidArgumentError, PrimeRangeError
from sylvester.primes import build_table, factorize
from sylvester.unitsmod import (
    count_unit_pairs,
    is_formula_shape,
    sylvester_identity_check,
    unit_group,
    unit_pair_distribution,
    unit_pairs_brute,
    unit_pairs_formula,
)

ODD_PRIMES = [3, 5, 7, 11, 13, 17]


@pytest.fixture(scope="module")
def table():
    # 2 * 3 * 5 * 7 * 11 * 13 * 17 = 510510
    return build_table(600_000)


def test_formula_examples(table):
    assert unit_pairs_formula(30, 2, table) == 3
    assert unit_pairs_formula(30, 6, table) == 6
    assert unit_pairs_formula(2, 0, table) == 1


def test_brute_examples():
    assert unit_pairs_brute(30, 2) == 3
    assert unit_pairs_brute(5, 1) == 3
    assert unit_pairs_brute(4, 2) == 2


def test_formula_matches_brute(table):
    for m in range(2, 1001, 2):
        if not factorize(m, table).is_squarefree:
            continue
        distribution = unit_pair_distribution(m)
        for n in range(m):
            assert unit_pairs_formula(m, n, table) == distribution[n], (m, n)


def test_distribution_agrees_with_brute():
    for m in (2, 9, 12, 30, 49):
        distribution = unit_pair_distribution(m)
        assert [unit_pairs_brute(m, n) for n in range(m)] == list(distribution)


@given(m=st.integers(min_value=2, max_value=400), n=st.integers(min_value=-1000, max_value=1000))
def test_negation_symmetry(m, n):
    assert unit_pairs_brute(m, n) == unit_pairs_brute(m, -n)


def test_total_mass(table):
    for m in range(2, 300):
        assert unit_pair_distribution(m).sum() == totient(m, table) ** 2


def test_unit_group():
    assert list(unit_group(12)) == [1, 5, 7, 11]
    assert list(unit_group(2)) == [1]


def test_formula_restricted_to_squarefree_even(table):
    assert not is_formula_shape(4, table)
    assert not is_formula_shape(15, table)
    with pytest.raises(FormulaDomainError):
        unit_pairs_formula(4, 2, table)
    with pytest.raises(FormulaDomainError):
        unit_pairs_formula(15, 2, table)


def test_dispatcher_routes(table):
    assert count_unit_pairs(30, 2, table).method == "formula"
    routed = count_unit_pairs(4, 2, table)
    assert (routed.method, routed.count, routed.n_residue) == ("brute", 2, 2)
    assert count_unit_pairs(45, 47, table).n_residue == 2


def test_modulus_errors(table):
    with pytest.raises(InvalidArgumentError):
        unit_pairs_brute(1, 0)
    with pytest.raises(PrimeRangeError):
        unit_pairs_formula(table.limit + 2, 2, table)


def test_identity_examples(table):
    check = sylvester_identity_check([3, 5], 3, table)
    assert (check.d, check.sylvester_d, check.base, check.lhs, check.rhs) == (6, 2, 3, 6, 6)
    assert check.render() == "lhs=6 rhs=6 equal=true"

    check = sylvester_identity_check([3, 5], 1, table)
    assert (check.d, check.lhs, check.rhs, check.equal) == (2, 3, 3, True)

    check = sylvester_identity_check([3, 5, 7], 105, table, verify_brute=True)
    assert check.d == 210
    assert check.sylvester_d * 5 == 16
    assert (check.base, check.lhs, check.rhs, check.brute) == (15, 48, 48, 48)


def test_identity_all_small_subsets(table):
    for t in range(1, 5):
        for qs in itertools.combinations(ODD_PRIMES, t):
            m = 2 * math.prod(qs)
            for n in range(1, m + 1):
                check = sylvester_identity_check(list(qs), n, table)
                assert check.equal, (qs, n)


def test_identity_against_enumeration(table):
    distribution = unit_pair_distribution(2 * 3 * 5 * 7)
    for n in range(1, 211):
        check = sylvester_identity_check([3, 5, 7], n, table)
        assert check.lhs == distribution[(2 * n) % 210]


def test_identity_argument_errors(table):
    with pytest.raises(InvalidArgumentError):
        sylvester_identity_check([3, 3], 1, table)
    with pytest.raises(InvalidArgumentError):
        sylvester_identity_check([3, 9], 1, table)
    with pytest.raises(InvalidArgumentError):
        sylvester_identity_check([2, 3], 1, table)
    with pytest.raises(InvalidArgumentError):
        sylvester_identity_check([3, 5], 0, table)
