"""Strongly multiplicative functions and their Dirichlet algebra at prime powers.

Every value here is an exact reduced fraction. A strongly multiplicative
f is fixed by its values on primes (f(p**k) = f(p)); its Dirichlet
inverse and its convolutions with other such functions stay
multiplicative but not strongly so, and are therefore carried as
explicit prime-power tables.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import DomainError, InvalidArgumentError, NotInvertibleError, PrimeRangeError
from .primes import PrimeTable, factorize

ExactRational = Fraction

RationalLike = Union[Fraction, int, float]


@dataclass(frozen=True)
class SmfSpec:
    """A strongly multiplicative function, given by its value on primes.

    ``unit_primes`` lists every prime with f(p) == 1 when that set is
    known and finite; fiber enumeration otherwise has to scan the table.
    """

    name: str
    prime_value: Callable[[int], Fraction] = field(repr=False, compare=False)
    unit_primes: Optional[Tuple[int, ...]] = None

    def at(self, p: int) -> Fraction:
        try:
            value = self.prime_value(p)
        except LookupError as e:
            raise DomainError(f"{self.name} has no value at prime {p}", "smf_eval") from e
        if value is None:
            raise DomainError(f"{self.name} has no value at prime {p}", "smf_eval")
        return Fraction(value)

    @classmethod
    def from_mapping(cls, name: str, values: Mapping[int, RationalLike]) -> "SmfSpec":
        table = {int(p): Fraction(v) for p, v in values.items()}
        units = tuple(sorted(p for p, v in table.items() if v == 1))
        return cls(name=name, prime_value=table.__getitem__, unit_primes=units)


PHI_BAR = SmfSpec("phibar", lambda p: Fraction(p - 1, p), unit_primes=())
SYLVESTER = SmfSpec(
    "sylvester",
    lambda p: Fraction(1) if p == 2 else Fraction(p - 1, p - 2),
    unit_primes=(2,),
)

_NAMED_SPECS = {
    "phibar": PHI_BAR,
    "phi_bar": PHI_BAR,
    "phi": PHI_BAR,
    "sylvester": SYLVESTER,
    "s": SYLVESTER,
}


def smf_spec(name: str) -> SmfSpec:
    try:
        return _NAMED_SPECS[name.lower()]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown function '{name}', expected one of {sorted(set(_NAMED_SPECS))}",
            "smf_spec",
        ) from None


@dataclass
class PrimePowerValueTable:
    """A multiplicative function given at prime powers; (p, 0) is 1 unless set."""

    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    name: str = "f"

    def get(self, p: int, k: int) -> Fraction:
        if (p, k) in self.entries:
            return self.entries[(p, k)]
        if k == 0:
            return Fraction(1)
        raise DomainError(f"{self.name} has no value at {p}^{k}", "prime_power_value")

    def set(self, p: int, k: int, value: RationalLike) -> None:
        self.entries[(p, k)] = Fraction(value)

    @classmethod
    def from_smf(cls, f: SmfSpec, primes: Iterable[int], max_k: int) -> "PrimePowerValueTable":
        values = cls(name=f.name)
        for p in primes:
            fp = f.at(int(p))
            for k in range(1, max_k + 1):
                values.set(int(p), k, fp)
        return values


def _require_positive(n: int, operation: str) -> None:
    if n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n}", operation)


def _require_exponent(k: int, operation: str) -> None:
    if k < 0:
        raise InvalidArgumentError(f"exponent must be >= 0, got {k}", operation)


def smf_eval(f: SmfSpec, n: int, table: PrimeTable) -> Fraction:
    _require_positive(n, "smf_eval")
    result = Fraction(1)
    for p in factorize(n, table).primes:
        result *= f.at(p)
    return result


def sylvester(n: int, table: PrimeTable) -> Fraction:
    _require_positive(n, "sylvester")
    return smf_eval(SYLVESTER, n, table)


def phi_bar(n: int, table: PrimeTable) -> Fraction:
    _require_positive(n, "phi_bar")
    return smf_eval(PHI_BAR, n, table)


def totient(n: int, table: PrimeTable) -> int:
    _require_positive(n, "totient")
    result = n
    for p in factorize(n, table).primes:
        result -= result // p
    return result


def convolve_prime_power(f: SmfSpec, g: SmfSpec, p: int, k: int) -> Fraction:
    """(f * g)(p**k) = f(p) + g(p) + (k - 1) f(p) g(p) for k >= 1."""
    _require_exponent(k, "convolve_prime_power")
    if k == 0:
        return Fraction(1)
    fp, gp = f.at(p), g.at(p)
    return fp + gp + (k - 1) * fp * gp


def inverse_prime_power(f: SmfSpec, p: int, k: int) -> Fraction:
    """f^-1(p**k) = (-1)**k f(p) (f(p) - 1)**(k - 1); 1 at k = 0."""
    _require_exponent(k, "inverse_prime_power")
    if k == 0:
        return Fraction(1)
    fp = f.at(p)
    if k == 1:
        return -fp
    return (-1) ** k * fp * (fp - 1) ** (k - 1)


def dirichlet_inverse_oracle(values: PrimePowerValueTable, p: int, k: int) -> Fraction:
    """f^-1(p**k) straight from the recurrence sum_{i<=j} f(p^i) f^-1(p^(j-i)) = [j == 0]."""
    _require_exponent(k, "dirichlet_inverse_oracle")
    if values.get(p, 0) != 1:
        raise NotInvertibleError(
            f"{values.name}(1) = {values.get(p, 0)}, inverse requires f(1) = 1",
            "dirichlet_inverse_oracle",
        )

    inverse: List[Fraction] = [Fraction(1)]
    for j in range(1, k + 1):
        inverse.append(-sum((values.get(p, i) * inverse[j - i] for i in range(1, j + 1)), Fraction(0)))
    return inverse[k]


def inverse_table(f: SmfSpec, primes: Iterable[int], max_k: int) -> PrimePowerValueTable:
    values = PrimePowerValueTable(name=f"{f.name}^-1")
    for p in primes:
        for k in range(1, max_k + 1):
            values.set(int(p), k, inverse_prime_power(f, int(p), k))
    return values


def convolution_table(
    f: SmfSpec, g: SmfSpec, primes: Iterable[int], max_k: int
) -> PrimePowerValueTable:
    values = PrimePowerValueTable(name=f"{f.name}*{g.name}")
    for p in primes:
        for k in range(1, max_k + 1):
            values.set(int(p), k, convolve_prime_power(f, g, int(p), k))
    return values


def eval_multiplicative(values: PrimePowerValueTable, n: int, table: PrimeTable) -> Fraction:
    """Value at n of the multiplicative function tabulated at prime powers."""
    _require_positive(n, "eval_multiplicative")
    result = Fraction(1)
    for p, e in factorize(n, table):
        result *= values.get(p, e)
    return result


def _unit_primes(f: SmfSpec, table: PrimeTable, start: int, upto: int) -> Tuple[List[int], int]:
    """Primes with f(p) == 1 among table.primes[start:] up to ``upto``; returns next index."""
    primes = table.primes
    found = []
    i = start
    while i < len(primes) and primes[i] <= upto:
        p = int(primes[i])
        i += 1
        try:
            if f.at(p) == 1:
                found.append(p)
        except DomainError:
            continue
    return found, i


def fiber_witnesses(
    f: SmfSpec,
    m: int,
    count: int,
    table: PrimeTable,
    bound: Optional[int] = None,
) -> List[int]:
    """The ``count`` smallest n with f(n) == f(m) of the form m * k.

    k ranges over integers supported on primes dividing m and primes
    where f is 1, so strong multiplicativity keeps the value fixed. The
    witnesses are capped at ``bound`` (default: table.limit); primes
    with f(p) == 1 are only searched inside the table.
    """
    if m <= 1:
        raise InvalidArgumentError(f"m must be > 1, got {m}", "fiber_witnesses")
    if count < 1:
        raise InvalidArgumentError(f"count must be >= 1, got {count}", "fiber_witnesses")
    cap = table.limit if bound is None else bound
    if m > table.limit or m > cap:
        raise PrimeRangeError(f"m={m} outside [2, {min(cap, table.limit)}]", "fiber_witnesses")

    smf_eval(f, m, table)  # every prime of m must be defined
    generators = list(factorize(m, table).primes)

    known_units = f.unit_primes is not None
    if known_units:
        generators.extend(p for p in f.unit_primes if p not in generators)
    generators.sort()
    scan_index = 0

    heap = [m]
    seen = {m}
    witnesses: List[int] = []
    while len(witnesses) < count:
        if not known_units:
            horizon = heap[0] if heap else cap
            fresh, scan_index = _unit_primes(f, table, scan_index, horizon // m)
            for p in fresh:
                if p in generators:
                    continue
                generators.append(p)
                for x in witnesses:
                    y = x * p
                    if y <= cap and y not in seen:
                        seen.add(y)
                        heapq.heappush(heap, y)
        if not heap:
            raise PrimeRangeError(
                f"only {len(witnesses)} witnesses of {f.name}={smf_eval(f, m, table)} "
                f"fit below {cap}",
                "fiber_witnesses",
                partial=witnesses,
            )
        x = heapq.heappop(heap)
        witnesses.append(x)
        for q in generators:
            y = x * q
            if y <= cap and y not in seen:
                seen.add(y)
                heapq.heappush(heap, y)
    return witnesses


@dataclass(frozen=True)
class AccumulationWitness:
    n: int
    prime: int
    witness: int
    value: Fraction
    witness_value: Fraction

    @property
    def gap(self) -> Fraction:
        return abs(self.witness_value - self.value)


def accumulation_witness(
    f: SmfSpec, n: int, eps: RationalLike, table: PrimeTable
) -> AccumulationWitness:
    """First odd prime p > n with |f(n)| |f(p) - 1| < eps, and the point n*p.

    Relies on |f(p) - 1| being nonincreasing in p beyond n, which holds
    for both phi-bar and the Sylvester factor.
    """
    _require_positive(n, "accumulation_witness")
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidArgumentError(f"eps must be positive, got {eps}", "accumulation_witness")

    value = smf_eval(f, n, table)
    primes = table.primes
    lo = max(int(np.searchsorted(primes, n, side="right")), 1)
    hi = len(primes)

    def close_enough(index: int) -> bool:
        return abs(value) * abs(f.at(int(primes[index])) - 1) < eps

    if lo >= hi or not close_enough(hi - 1):
        raise PrimeRangeError(
            f"no prime up to {table.limit} brings {f.name}({n}) within {eps}",
            "accumulation_witness",
        )
    while lo < hi:
        mid = (lo + hi) // 2
        if close_enough(mid):
            hi = mid
        else:
            lo = mid + 1

    p = int(primes[lo])
    return AccumulationWitness(
        n=n, prime=p, witness=n * p, value=value, witness_value=value * f.at(p)
    )
