"""Ordered unit pairs summing to a residue: s*_m(n) = #{(r, s) units mod m : r + s = n}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from .arith import sylvester
from .errors import FormulaDomainError, InvalidArgumentError, PrimeRangeError
from .log import get_logger
from .primes import PrimeTable, factorize

logger = get_logger("UNITS")


@dataclass(frozen=True)
class UnitPairCount:
    m: int
    n_residue: int
    count: int
    method: str


class IdentityCheck(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    primes: tuple
    n: int
    m: int
    d: int
    sylvester_d: Fraction
    base: int
    lhs: int
    rhs: int
    equal: bool
    brute: Optional[int] = None

    def render(self) -> str:
        return f"lhs={self.lhs} rhs={self.rhs} equal={'true' if self.equal else 'false'}"


def _require_modulus(m: int, operation: str) -> None:
    if m < 2:
        raise InvalidArgumentError(f"modulus must be >= 2, got {m}", operation)


def unit_mask(m: int) -> np.ndarray:
    """Boolean mask over residues [0, m): True on units."""
    _require_modulus(m, "unit_mask")
    residues = np.arange(m, dtype=np.int64)
    return np.gcd(residues, m) == 1


def unit_group(m: int) -> np.ndarray:
    return np.flatnonzero(unit_mask(m))


def unit_pairs_brute(m: int, n: int) -> int:
    """For each unit r, test whether n - r is a unit mod m."""
    _require_modulus(m, "unit_pairs_brute")
    mask = unit_mask(m)
    units = np.flatnonzero(mask)
    return int(np.count_nonzero(mask[(n - units) % m]))


def unit_pair_distribution(m: int) -> np.ndarray:
    """s*_m(n) for every residue n, by brute force over all unit pairs."""
    units = unit_group(m)
    sums = (units[:, None] + units[None, :]) % m
    return np.bincount(sums.ravel(), minlength=m)


def is_formula_shape(m: int, table: PrimeTable) -> bool:
    return m % 2 == 0 and factorize(m, table).is_squarefree


def unit_pairs_formula(m: int, n: int, table: PrimeTable) -> int:
    """m * prod_{p|m, p|n} (1 - 1/p) * prod_{p|m, p∤n} (1 - 2/p), squarefree even m only."""
    _require_modulus(m, "unit_pairs_formula")
    if m > table.limit:
        raise PrimeRangeError(f"m={m} exceeds table limit {table.limit}", "unit_pairs_formula")
    if not is_formula_shape(m, table):
        raise FormulaDomainError(
            f"closed form is only applied to squarefree even moduli, got m={m}",
            "unit_pairs_formula",
        )

    value = Fraction(m)
    for p in factorize(m, table).primes:
        value *= Fraction(p - 1, p) if n % p == 0 else Fraction(p - 2, p)
    if value.denominator != 1:
        raise FormulaDomainError(
            f"non-integral value {value} for m={m}, n={n}", "unit_pairs_formula"
        )
    return int(value)


def count_unit_pairs(m: int, n: int, table: PrimeTable) -> UnitPairCount:
    """Closed form where it is established, brute force everywhere else."""
    _require_modulus(m, "count_unit_pairs")
    residue = n % m
    if m <= table.limit and is_formula_shape(m, table):
        return UnitPairCount(m, residue, unit_pairs_formula(m, n, table), "formula")
    logger.debug(f"m={m} outside the closed-form shape, enumerating")
    return UnitPairCount(m, residue, unit_pairs_brute(m, n), "brute")


def sylvester_identity_check(
    odd_primes: Iterable[int],
    n: int,
    table: PrimeTable,
    verify_brute: bool = False,
) -> IdentityCheck:
    """Compare s*_m(2n) with S(d) * s*_m(2) for m = 2 q_1 ... q_t and d = gcd(2n, m)."""
    qs = [int(q) for q in odd_primes]
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}", "sylvester_identity_check")
    if len(set(qs)) != len(qs):
        raise InvalidArgumentError(f"primes must be distinct, got {qs}", "sylvester_identity_check")
    qs.sort()

    m = 2 * math.prod(qs)
    if m > table.limit:
        raise PrimeRangeError(
            f"m={m} exceeds table limit {table.limit}", "sylvester_identity_check"
        )
    for q in qs:
        if q % 2 == 0 or not table.is_prime(q):
            raise InvalidArgumentError(
                f"{q} is not an odd prime", "sylvester_identity_check"
            )

    lhs = unit_pairs_formula(m, 2 * n, table)
    d = math.gcd(2 * n, m)
    s_d = sylvester(d, table)
    base = unit_pairs_formula(m, 2, table)
    rhs = s_d * base
    if rhs.denominator != 1:
        raise FormulaDomainError(
            f"S({d}) * s*_{m}(2) = {rhs} is not an integer", "sylvester_identity_check"
        )

    return IdentityCheck(
        primes=tuple(qs),
        n=n,
        m=m,
        d=d,
        sylvester_d=s_d,
        base=base,
        lhs=lhs,
        rhs=int(rhs),
        equal=lhs == int(rhs),
        brute=unit_pairs_brute(m, 2 * n) if verify_brute else None,
    )
