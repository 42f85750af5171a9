from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

from .log import get_logger

logger = get_logger("VIOLATION")


@dataclass(frozen=True)
class CrossoverViolation:
    """An n where the Sylvester factor is not strictly below G(n)."""

    n: int
    g: int
    sylvester: float
    big_g: float
    near_tie: bool = False

    @property
    def reason(self) -> str:
        if self.g == 0:
            return "NO GOLDBACH PAIR"
        if self.near_tie:
            return "NEAR TIE (EXTENDED PRECISION)"
        return "S(n) >= G(n)"


class ViolationReport:
    """Collects crossover violations and renders the one-line summary."""

    def __init__(self, violations: Iterable[CrossoverViolation] = ()):
        self._violations: List[CrossoverViolation] = []
        for violation in violations:
            self.handle(violation)

    def handle(self, violation: CrossoverViolation) -> None:
        logger.debug(
            f"n={violation.n} g={violation.g} S={violation.sylvester!r} "
            f"G={violation.big_g!r}: {violation.reason}"
        )
        self._violations.append(violation)

    @property
    def violations(self) -> List[CrossoverViolation]:
        return sorted(self._violations, key=lambda v: v.n)

    def __len__(self) -> int:
        return len(self._violations)

    @property
    def max_violation_n(self) -> Optional[int]:
        return max((v.n for v in self._violations), default=None)

    @property
    def near_ties(self) -> int:
        return sum(1 for v in self._violations if v.near_tie)

    def summary_line(self) -> str:
        largest = self.max_violation_n
        return f"violations={len(self)} max_violation_n={'none' if largest is None else largest}"
