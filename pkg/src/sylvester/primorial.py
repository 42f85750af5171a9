"""Primorials P_n and the extremal behaviour of phi-bar and S on [1, P_n).

For m < P_n, phi-bar(m) > phi-bar(P_n), and S(m) < S(P_n) unless 2m = P_n,
in which case the two are equal. Comparisons are exact: each value is
carried as an integer numerator/denominator pair and compared by
cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from .arith import phi_bar, sylvester
from .errors import InvalidArgumentError, PrimeRangeError, ResourceLimitError
from .log import get_logger
from .pipeline.scheduler import ChunkScheduler
from .primes import PrimeTable, nth_primorial

logger = get_logger("PRIMORIAL")

EXHAUSTIVE_MAX_INDEX = 7  # P_7 = 510510


@dataclass(frozen=True)
class PrimorialRecord:
    index: int
    value: int
    phi_bar: Fraction
    sylvester: Fraction


class Verdict(BaseModel):
    check: str
    n: int
    primorial: int
    passed: bool
    checked: int
    exhaustive: bool
    counterexample: Optional[int] = None

    def render(self) -> str:
        mode = "exhaustive" if self.exhaustive else "sampled"
        line = (
            f"check={self.check} n={self.n} P={self.primorial} {mode} "
            f"checked={self.checked} passed={'true' if self.passed else 'false'}"
        )
        if self.counterexample is not None:
            line += f" counterexample={self.counterexample}"
        return line


@dataclass(frozen=True)
class LimitDiagnostics:
    index: np.ndarray = field(repr=False)
    phi_bar: np.ndarray = field(repr=False)
    sylvester: np.ndarray = field(repr=False)

    def rows(self) -> List[Tuple[int, float, float]]:
        return [
            (int(i), float(f), float(s))
            for i, f, s in zip(self.index, self.phi_bar, self.sylvester)
        ]

    @property
    def phi_bar_decreasing(self) -> bool:
        return bool(np.all(np.diff(self.phi_bar) < 0))

    @property
    def sylvester_increasing(self) -> bool:
        return bool(np.all(np.diff(self.sylvester) > 0))


def primorial_table(n_max: int, table: PrimeTable) -> List[PrimorialRecord]:
    if n_max < 1:
        raise InvalidArgumentError(f"n_max must be >= 1, got {n_max}", "primorial_table")
    if n_max > table.prime_count:
        raise PrimeRangeError(
            f"P_{n_max} needs {n_max} primes, table holds {table.prime_count}",
            "primorial_table",
        )

    records = []
    value, phi, s = 1, Fraction(1), Fraction(1)
    for index, p in enumerate(table.primes[:n_max], start=1):
        p = int(p)
        value *= p
        phi *= Fraction(p - 1, p)
        if p != 2:
            s *= Fraction(p - 1, p - 2)
        records.append(PrimorialRecord(index=index, value=value, phi_bar=phi, sylvester=s))
    return records


def _num_den(
    ms: np.ndarray,
    table: PrimeTable,
    factor: Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]],
) -> Tuple[np.ndarray, np.ndarray]:
    """Numerator and denominator products of a strongly multiplicative f over ms."""
    spf = table.spf_array
    x = np.array(ms, dtype=np.int64)
    num = np.ones(len(x), dtype=np.int64)
    den = np.ones(len(x), dtype=np.int64)
    while True:
        active = x > 1
        if not active.any():
            break
        p = np.where(active, spf[x], 1).astype(np.int64)
        top, bottom = factor(p[active])
        num[active] *= top
        den[active] *= bottom
        while True:
            divisible = active & (x % p == 0)
            if not divisible.any():
                break
            x[divisible] //= p[divisible]
    return num, den


def _phi_bar_parts(p: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return p - 1, p


def _sylvester_parts(p: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    odd = p != 2
    return np.where(odd, p - 1, 1), np.where(odd, p - 2, 1)


def _primorial_for_check(
    n: int,
    table: PrimeTable,
    samples: Optional[int],
    exhaustive_max: int,
    operation: str,
) -> int:
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}", operation)
    if n > exhaustive_max and samples is None:
        raise ResourceLimitError(
            f"exhaustive scan capped at n={exhaustive_max}; pass samples for n={n}",
            operation,
        )
    primorial = nth_primorial(n, table)
    if primorial > table.limit:
        raise PrimeRangeError(
            f"P_{n}={primorial} exceeds table limit {table.limit}", operation
        )
    return primorial


def _first_failure(
    n: int,
    table: PrimeTable,
    failing: Callable[[np.ndarray], np.ndarray],
    primorial: int,
    samples: Optional[int],
    seed: int,
    exhaustive_max: int,
    scheduler: Optional[ChunkScheduler],
) -> Tuple[Optional[int], int, bool]:
    """Smallest failing m (or None), how many m were checked, and whether exhaustively."""
    if n <= exhaustive_max:
        scheduler = scheduler or ChunkScheduler()

        def scan(lo: int, hi: int) -> Optional[int]:
            ms = np.arange(lo, hi + 1, dtype=np.int64)
            bad = np.flatnonzero(failing(ms))
            return int(ms[bad[0]]) if len(bad) else None

        def first(best: Optional[int], found: Optional[int]) -> Optional[int]:
            if found is None:
                return best
            return found if best is None else min(best, found)

        worst = scheduler.reduce_ranges(scan, 1, primorial - 1, first, None) if primorial > 1 else None
        return worst, primorial - 1, True

    rng = np.random.default_rng(seed)
    ms = np.unique(rng.integers(1, primorial, size=samples, dtype=np.int64))
    bad = np.flatnonzero(failing(ms))
    return (int(ms[bad[0]]) if len(bad) else None), len(ms), False


def check_phi_bar_minimality(
    n: int,
    table: PrimeTable,
    samples: Optional[int] = None,
    seed: int = 0,
    exhaustive_max: int = EXHAUSTIVE_MAX_INDEX,
    scheduler: Optional[ChunkScheduler] = None,
) -> Verdict:
    """phi-bar(m) > phi-bar(P_n) for every m < P_n."""
    primorial = _primorial_for_check(n, table, samples, exhaustive_max, "check_phi_bar_minimality")
    target = phi_bar(primorial, table)

    def failing(ms: np.ndarray) -> np.ndarray:
        num, den = _num_den(ms, table, _phi_bar_parts)
        return num * target.denominator <= target.numerator * den

    worst, checked, exhaustive = _first_failure(
        n, table, failing, primorial, samples, seed, exhaustive_max, scheduler
    )
    verdict = Verdict(
        check="phi",
        n=n,
        primorial=primorial,
        passed=worst is None,
        checked=checked,
        exhaustive=exhaustive,
        counterexample=worst,
    )
    logger.info(verdict.render())
    return verdict


def check_sylvester_maximality(
    n: int,
    table: PrimeTable,
    samples: Optional[int] = None,
    seed: int = 0,
    exhaustive_max: int = EXHAUSTIVE_MAX_INDEX,
    scheduler: Optional[ChunkScheduler] = None,
) -> Verdict:
    """S(m) < S(P_n) for every m < P_n with 2m != P_n, and S(P_n / 2) = S(P_n)."""
    primorial = _primorial_for_check(n, table, samples, exhaustive_max, "check_sylvester_maximality")
    target = sylvester(primorial, table)
    half = primorial // 2

    def failing(ms: np.ndarray) -> np.ndarray:
        num, den = _num_den(ms, table, _sylvester_parts)
        return (num * target.denominator >= target.numerator * den) & (ms != half)

    worst, checked, exhaustive = _first_failure(
        n, table, failing, primorial, samples, seed, exhaustive_max, scheduler
    )
    if n >= 2 and sylvester(half, table) != target:
        worst = half if worst is None else min(worst, half)

    verdict = Verdict(
        check="sylvester",
        n=n,
        primorial=primorial,
        passed=worst is None,
        checked=checked,
        exhaustive=exhaustive,
        counterexample=worst,
    )
    logger.info(verdict.render())
    return verdict


def limit_diagnostics(n_max: int, table: PrimeTable) -> LimitDiagnostics:
    """phi-bar(P_n) and S(P_n) for n = 1..n_max, in floating point.

    The exact values have numerators with one factor per prime, so past
    the first few hundred indices only the float trajectory is kept.
    """
    if n_max < 1:
        raise InvalidArgumentError(f"n_max must be >= 1, got {n_max}", "limit_diagnostics")
    if n_max > table.prime_count:
        raise PrimeRangeError(
            f"needs {n_max} primes, table holds {table.prime_count}", "limit_diagnostics"
        )
    ps = table.primes[:n_max].astype(np.float64)
    phi = np.cumprod((ps - 1.0) / ps)
    s_factors = np.where(ps == 2.0, 1.0, (ps - 1.0) / np.where(ps == 2.0, 1.0, ps - 2.0))
    return LimitDiagnostics(
        index=np.arange(1, n_max + 1),
        phi_bar=phi,
        sylvester=np.cumprod(s_factors),
    )
