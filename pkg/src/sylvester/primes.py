from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from .errors import InvalidArgumentError, PrimeRangeError, ResourceLimitError
from .log import get_logger

logger = get_logger("SIEVE")

DEFAULT_MAX_SIEVE_LIMIT = 100_000_000


class PrimeTable:
    """Primality and smallest-prime-factor oracle over [0, limit].

    Odd numbers are kept in a flat bitset (index i <-> 2i+1); the SPF
    array covers every integer. Both arrays are read-only once built, so
    one instance can be shared between threads.
    """

    def __init__(self, limit: int, odd_bits: np.ndarray, spf: np.ndarray):
        self.limit = limit
        self._odd = odd_bits
        self._spf = spf
        odd_primes = 2 * np.flatnonzero(odd_bits).astype(np.int64) + 1
        self._primes = np.concatenate(([2], odd_primes)).astype(np.int64)
        for array in (self._odd, self._spf, self._primes):
            array.flags.writeable = False

    @property
    def primes(self) -> np.ndarray:
        return self._primes

    @property
    def spf_array(self) -> np.ndarray:
        return self._spf

    @property
    def prime_count(self) -> int:
        return len(self._primes)

    @property
    def odd_prime_count(self) -> int:
        return len(self._primes) - 1

    def _check(self, k: int, operation: str) -> None:
        if k < 0 or k > self.limit:
            raise PrimeRangeError(f"{k} outside [0, {self.limit}]", operation)

    def is_prime(self, k: int) -> bool:
        self._check(k, "is_prime")
        if k & 1 == 0:
            return k == 2
        return bool(self._odd[k >> 1])

    def is_odd_prime_array(self, ks: np.ndarray) -> np.ndarray:
        """Vectorized odd-primality test; every entry must lie in [0, limit]."""
        ks = np.asarray(ks, dtype=np.int64)
        odd = (ks & 1) == 1
        result = np.zeros(ks.shape, dtype=bool)
        result[odd] = self._odd[ks[odd] >> 1]
        return result

    def odd_prime_indicator(self, count: int) -> np.ndarray:
        """Entry i is 1 iff 2i+1 is prime, for i < count."""
        if 2 * (count - 1) + 1 > self.limit:
            raise PrimeRangeError(
                f"odd indicator of length {count} needs limit {2 * count - 1}",
                "odd_prime_indicator",
            )
        return self._odd[:count].astype(np.int64)

    def spf(self, k: int) -> int:
        if k < 2:
            raise PrimeRangeError(f"spf undefined for {k}", "spf")
        self._check(k, "spf")
        return int(self._spf[k])

    def nth_prime(self, index: int) -> int:
        """1-based: nth_prime(1) == 2."""
        if index < 1 or index > len(self._primes):
            raise PrimeRangeError(
                f"table holds {len(self._primes)} primes, asked for #{index}",
                "nth_prime",
            )
        return int(self._primes[index - 1])

    def odd_primes(self, count: int) -> np.ndarray:
        if count > self.odd_prime_count:
            raise PrimeRangeError(
                f"table holds {self.odd_prime_count} odd primes, asked for {count}",
                "odd_primes",
            )
        return self._primes[1 : count + 1]

    def primes_between(self, lo: int, hi: int) -> np.ndarray:
        """Primes p with lo <= p <= hi."""
        start = np.searchsorted(self._primes, lo, side="left")
        stop = np.searchsorted(self._primes, hi, side="right")
        return self._primes[start:stop]

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit}, primes={self.prime_count})"


@dataclass(frozen=True)
class Factorization:
    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _odd_sieve(limit: int) -> np.ndarray:
    bits = np.ones((limit + 1) // 2, dtype=bool)
    bits[0] = False
    root = math.isqrt(limit)
    for i in range(1, (root - 1) // 2 + 1):
        if bits[i]:
            p = 2 * i + 1
            bits[p * p // 2 :: p] = False
    return bits


def _spf_sieve(limit: int, odd_bits: np.ndarray) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int32)
    spf[2::2] = 2
    root = math.isqrt(limit)
    for i in np.flatnonzero(odd_bits[: (root - 1) // 2 + 1]):
        p = 2 * int(i) + 1
        view = spf[p * p :: p]
        view[view == 0] = p
    unset = np.flatnonzero(spf == 0)
    spf[unset] = unset
    spf[:2] = 0
    return spf


def build_table(limit: int, max_limit: int = DEFAULT_MAX_SIEVE_LIMIT) -> PrimeTable:
    if limit < 2:
        raise InvalidArgumentError(f"limit must be >= 2, got {limit}", "build_table")
    if limit > max_limit:
        raise ResourceLimitError(
            f"limit {limit} exceeds the sieve memory budget {max_limit}", "build_table"
        )

    odd_bits = _odd_sieve(limit)
    spf = _spf_sieve(limit, odd_bits)
    table = PrimeTable(limit, odd_bits, spf)
    logger.info(f"Built table up to {limit}: {table.prime_count} primes")
    return table


def prime_limit_for_count(count: int) -> int:
    """Upper bound on the count-th prime (Rosser: p_k < k(ln k + ln ln k), k >= 6)."""
    if count < 1:
        raise InvalidArgumentError(f"count must be >= 1, got {count}", "prime_limit_for_count")
    if count < 6:
        return 13
    return math.ceil(count * (math.log(count) + math.log(math.log(count))))


def factorize(n: int, table: PrimeTable) -> Factorization:
    if n < 1 or n > table.limit:
        raise PrimeRangeError(f"{n} outside [1, {table.limit}]", "factorize")

    spf = table.spf_array
    factors = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        factors.append((p, e))
    return Factorization(tuple(factors))


def nth_primorial(n: int, table: PrimeTable) -> int:
    if n < 1:
        raise InvalidArgumentError(f"primorial index must be >= 1, got {n}", "nth_primorial")
    if n > table.prime_count:
        raise PrimeRangeError(
            f"P_{n} needs {n} primes, table holds {table.prime_count}", "nth_primorial"
        )
    return math.prod(int(p) for p in table.primes[:n])
