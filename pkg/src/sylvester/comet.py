"""Goldbach comet: exact g(n), the twin prime constant, h(n), G(n) and the S-vs-G scan.

g(n) counts ordered pairs of odd primes (p, q) with p + q = 2n. The
normalized comet G(n) = (ln n)^2 g(n) / (4 c n) tracks the Sylvester
factor S(n); the scan reports every n where S(n) >= G(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Tuple

import mpmath
import numpy as np

from .arith import sylvester
from .errors import (
    InvalidArgumentError,
    PrecisionError,
    PrimeRangeError,
    ReproductionError,
)
from .log import get_logger
from .ntt import self_convolve
from .pipeline.scheduler import ChunkScheduler
from .primes import PrimeTable
from .violation import CrossoverViolation, ViolationReport

logger = get_logger("COMET")

TWIN_PRIME_CONSTANT_PUBLISHED = 0.6601618
# 2 e^-gamma, the factor in Sylvester's own (incorrect) asymptotic; informational only
SYLVESTER_HISTORICAL_FACTOR = 2.0 * math.exp(-0.57721566490153286)

CLAIM_LO = 72_065
CLAIM_HI = 2_000_000
# scan of [3, CLAIM_LO - 1] with c over 10**6 odd primes
LAST_VIOLATION_BELOW_CLAIM = 72_064
VIOLATIONS_BELOW_CLAIM = 770

DEFAULT_PRECISION_GUARD = 1e-12
EXTENDED_DPS = 50


@dataclass(frozen=True)
class GoldbachCounts:
    n_max: int
    counts: np.ndarray = field(repr=False, compare=False)

    def __getitem__(self, n: int) -> int:
        if n < 0 or n > self.n_max:
            raise PrimeRangeError(f"g({n}) outside [0, {self.n_max}]", "GoldbachCounts")
        return int(self.counts[n])

    def window(self, lo: int, hi: int) -> np.ndarray:
        return self.counts[lo : hi + 1]


@dataclass(frozen=True)
class CometRecord:
    n: int
    g: int
    sylvester: float
    big_g: float
    phi_bar: Optional[float] = None


@dataclass(frozen=True)
class TwinPrimeConstant:
    terms_used: int
    value: float
    bracket: Tuple[float, float]
    last_prime: int
    partials: np.ndarray = field(repr=False, compare=False)

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]

    @property
    def monotone(self) -> bool:
        return bool(np.all(np.diff(self.partials) < 0))


def _require_table(table: PrimeTable, n_max: int, operation: str) -> None:
    if table.limit < 2 * n_max:
        raise PrimeRangeError(
            f"needs table limit >= {2 * n_max}, table covers {table.limit}", operation
        )


def goldbach_counts(n_max: int, table: PrimeTable) -> GoldbachCounts:
    """Exact g(n) for every n <= n_max from one self-convolution.

    With b[i] = 1 iff 2i+1 is an odd prime, (2i+1) + (2j+1) = 2n exactly
    when i + j = n - 1, so g(n) = (b * b)[n - 1].
    """
    if n_max < 1:
        raise InvalidArgumentError(f"n_max must be >= 1, got {n_max}", "goldbach_counts")
    _require_table(table, n_max, "goldbach_counts")

    indicator = table.odd_prime_indicator(n_max)
    pair_counts = self_convolve(indicator)

    counts = np.zeros(n_max + 1, dtype=np.int64)
    counts[1:] = pair_counts[:n_max]
    logger.info(f"g(n) for n <= {n_max}: min over [3, n_max] = {counts[3:].min() if n_max >= 3 else 0}")
    return GoldbachCounts(n_max=n_max, counts=counts)


def goldbach_brute(n: int, table: PrimeTable) -> int:
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}", "goldbach_brute")
    _require_table(table, n, "goldbach_brute")
    even = 2 * n
    return sum(1 for p in table.primes_between(3, even - 3) if table.is_prime(even - int(p)))


def twin_prime_constant(num_primes: int, table: PrimeTable) -> TwinPrimeConstant:
    """Partial product of 1 - 1/(p-1)^2 over the first ``num_primes`` odd primes.

    Every factor is below 1, so the partial product bounds c from above;
    the tail over odd m > P is at most 1/(2(P-1)), which gives the lower end.
    """
    if num_primes < 1:
        raise InvalidArgumentError(
            f"num_primes must be >= 1, got {num_primes}", "twin_prime_constant"
        )
    odd = table.odd_primes(num_primes).astype(np.float64)
    partials = np.cumprod(1.0 - 1.0 / (odd - 1.0) ** 2)

    value = float(partials[-1])
    last = int(odd[-1])
    lower = value * (1.0 - 1.0 / (2.0 * (last - 1)))
    logger.info(f"c over {num_primes} odd primes (last {last}): {value!r}")
    return TwinPrimeConstant(
        terms_used=num_primes,
        value=value,
        bracket=(lower, value),
        last_prime=last,
        partials=partials,
    )


def hl_estimate(n: int, c: float, table: PrimeTable) -> float:
    """h(n) = 4 c n / (ln n)^2 * S(n)."""
    if n < 2:
        raise InvalidArgumentError(f"n must be >= 2, got {n}", "hl_estimate")
    return 4.0 * c * n / math.log(n) ** 2 * float(sylvester(n, table))


def big_g(n: int, g_n: int, c: float) -> float:
    """G(n) = (ln n)^2 g(n) / (4 c n)."""
    if n < 2:
        raise InvalidArgumentError(f"n must be >= 2, got {n}", "big_g")
    if g_n < 0:
        raise InvalidArgumentError(f"g(n) must be >= 0, got {g_n}", "big_g")
    return math.log(n) ** 2 * g_n / (4.0 * c * n)


def _strongly_multiplicative_array(
    lo: int,
    hi: int,
    table: PrimeTable,
    prime_factor: Callable[[np.ndarray], np.ndarray],
    operation: str,
) -> np.ndarray:
    if lo < 1 or hi > table.limit or hi < lo:
        raise PrimeRangeError(f"[{lo}, {hi}] outside [1, {table.limit}]", operation)

    spf = table.spf_array
    x = np.arange(lo, hi + 1, dtype=np.int64)
    values = np.ones(len(x), dtype=np.float64)
    while True:
        active = x > 1
        if not active.any():
            break
        p = np.where(active, spf[x], 1).astype(np.int64)
        values[active] *= prime_factor(p[active])
        # divide the prime out completely before moving to the next one
        while True:
            divisible = active & (x % p == 0)
            if not divisible.any():
                break
            x[divisible] //= p[divisible]
    return values


def _sylvester_factor(p: np.ndarray) -> np.ndarray:
    pf = p.astype(np.float64)
    return np.where(p == 2, 1.0, (pf - 1.0) / np.where(p == 2, 1.0, pf - 2.0))


def _phi_bar_factor(p: np.ndarray) -> np.ndarray:
    pf = p.astype(np.float64)
    return (pf - 1.0) / pf


def sylvester_array(lo: int, hi: int, table: PrimeTable) -> np.ndarray:
    """float(S(n)) for n in [lo, hi], factors multiplied in ascending prime order."""
    return _strongly_multiplicative_array(lo, hi, table, _sylvester_factor, "sylvester_array")


def phi_bar_array(lo: int, hi: int, table: PrimeTable) -> np.ndarray:
    return _strongly_multiplicative_array(lo, hi, table, _phi_bar_factor, "phi_bar_array")


def big_g_array(lo: int, hi: int, g: np.ndarray, c: float) -> np.ndarray:
    n = np.arange(lo, hi + 1, dtype=np.float64)
    return np.log(n) ** 2 * g / (4.0 * c * n)


def _extended_violation(n: int, g_n: int, c: float, table: PrimeTable) -> bool:
    """Decide S(n) >= G(n) with S exact and G at EXTENDED_DPS digits."""
    ctx = mpmath.MPContext()
    ctx.dps = EXTENDED_DPS
    s_exact = sylvester(n, table)
    s = ctx.mpf(s_exact.numerator) / s_exact.denominator
    g = ctx.log(n) ** 2 * g_n / (4 * ctx.mpf(c) * n)
    if abs(s - g) <= ctx.mpf(10) ** (-(EXTENDED_DPS - 10)) * s:
        raise PrecisionError(
            f"S({n}) and G({n}) agree to {EXTENDED_DPS - 10} digits; tie unresolved",
            "crossover_scan",
        )
    return bool(s >= g)


def _resolve_counts(
    counts: Optional[GoldbachCounts], n_hi: int, table: PrimeTable
) -> GoldbachCounts:
    if counts is None:
        return goldbach_counts(n_hi, table)
    if counts.n_max < n_hi:
        raise PrimeRangeError(
            f"counts cover n <= {counts.n_max}, scan needs {n_hi}", "crossover_scan"
        )
    return counts


def _check_scan_range(n_lo: int, n_hi: int, table: PrimeTable, operation: str) -> None:
    if n_lo < 3:
        raise InvalidArgumentError(f"n_lo must be >= 3, got {n_lo}", operation)
    if n_hi < n_lo:
        raise InvalidArgumentError(f"empty range [{n_lo}, {n_hi}]", operation)
    _require_table(table, n_hi, operation)


def crossover_scan(
    n_lo: int,
    n_hi: int,
    c: float,
    table: PrimeTable,
    counts: Optional[GoldbachCounts] = None,
    scheduler: Optional[ChunkScheduler] = None,
    precision_guard: float = DEFAULT_PRECISION_GUARD,
) -> List[CrossoverViolation]:
    """Every n in [n_lo, n_hi] with S(n) >= G(n), ascending.

    Pairs within ``precision_guard`` (relative) of each other are decided
    again in extended precision and flagged ``near_tie``.
    """
    _check_scan_range(n_lo, n_hi, table, "crossover_scan")
    counts = _resolve_counts(counts, n_hi, table)
    scheduler = scheduler or ChunkScheduler()

    def scan_chunk(lo: int, hi: int) -> List[CrossoverViolation]:
        s = sylvester_array(lo, hi, table)
        g = counts.window(lo, hi)
        big = big_g_array(lo, hi, g, c)
        near = np.abs(s - big) <= precision_guard * np.maximum(s, big)
        found = []
        for i in np.flatnonzero((s >= big) | near):
            n = lo + int(i)
            if near[i]:
                if not _extended_violation(n, int(g[i]), c, table):
                    continue
            found.append(
                CrossoverViolation(
                    n=n,
                    g=int(g[i]),
                    sylvester=float(s[i]),
                    big_g=float(big[i]),
                    near_tie=bool(near[i]),
                )
            )
        return found

    report = ViolationReport()
    for chunk in scheduler.map_ranges(scan_chunk, n_lo, n_hi):
        for violation in chunk:
            report.handle(violation)
    logger.info(
        f"Scan [{n_lo}, {n_hi}]: {report.summary_line()} near_ties={report.near_ties}"
    )
    return report.violations


def verify_crossover_claim(
    c: float,
    table: PrimeTable,
    counts: Optional[GoldbachCounts] = None,
    scheduler: Optional[ChunkScheduler] = None,
    n_lo: int = CLAIM_LO,
    n_hi: int = CLAIM_HI,
) -> None:
    """Abort unless S(n) < G(n) holds on the whole published range."""
    violations = crossover_scan(n_lo, n_hi, c, table, counts=counts, scheduler=scheduler)
    if violations:
        raise ReproductionError(
            f"{len(violations)} violations of S(n) < G(n) in [{n_lo}, {n_hi}], "
            f"first at n={violations[0].n}; check the logarithm base and the constant c",
            "verify_crossover_claim",
            rows=violations,
        )


def comet_emit(
    n_lo: int,
    n_hi: int,
    stride: int,
    table: PrimeTable,
    c: float,
    counts: Optional[GoldbachCounts] = None,
    with_phi_bar: bool = False,
    scheduler: Optional[ChunkScheduler] = None,
) -> Iterator[CometRecord]:
    """Records for n = n_lo, n_lo + stride, ... <= n_hi in ascending order.

    Arguments are checked before the first record is requested.
    """
    _check_scan_range(n_lo, n_hi, table, "comet_emit")
    if stride < 1:
        raise InvalidArgumentError(f"stride must be >= 1, got {stride}", "comet_emit")
    counts = _resolve_counts(counts, n_hi, table)
    scheduler = scheduler or ChunkScheduler()

    def emit_chunk(lo: int, hi: int) -> List[CometRecord]:
        first = lo + (-(lo - n_lo)) % stride
        if first > hi:
            return []
        s = sylvester_array(lo, hi, table)
        g = counts.window(lo, hi)
        big = big_g_array(lo, hi, g, c)
        phi = phi_bar_array(lo, hi, table) if with_phi_bar else None
        return [
            CometRecord(
                n=lo + i,
                g=int(g[i]),
                sylvester=float(s[i]),
                big_g=float(big[i]),
                phi_bar=float(phi[i]) if phi is not None else None,
            )
            for i in range(first - lo, hi - lo + 1, stride)
        ]

    def records() -> Iterator[CometRecord]:
        for chunk in scheduler.map_ranges(emit_chunk, n_lo, n_hi):
            yield from chunk

    return records()


@dataclass(frozen=True)
class RatioSummary:
    n_lo: int
    n_hi: int
    mean_g_over_s: float
    mean_h_over_g: float


def ratio_summary(
    n_lo: int,
    n_hi: int,
    c: float,
    table: PrimeTable,
    counts: Optional[GoldbachCounts] = None,
) -> RatioSummary:
    """Window means of G(n)/S(n) and h(n)/g(n), the desk-scale view of the asymptotic."""
    _check_scan_range(n_lo, n_hi, table, "ratio_summary")
    counts = _resolve_counts(counts, n_hi, table)
    s = sylvester_array(n_lo, n_hi, table)
    g = counts.window(n_lo, n_hi).astype(np.float64)
    n = np.arange(n_lo, n_hi + 1, dtype=np.float64)
    big = big_g_array(n_lo, n_hi, g, c)
    h = 4.0 * c * n / np.log(n) ** 2 * s
    return RatioSummary(
        n_lo=n_lo,
        n_hi=n_hi,
        mean_g_over_s=float(np.mean(big / s)),
        mean_h_over_g=float(np.mean(h / g)),
    )
