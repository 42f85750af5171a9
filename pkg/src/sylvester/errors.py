from __future__ import annotations

from typing import Any, Optional, Sequence


class SylvesterError(Exception):
    def __init__(self, message: str, operation: str):
        self.operation = operation
        self.detail = message
        super().__init__(f"{operation}: {message}")


class InvalidArgumentError(SylvesterError, ValueError):
    pass


class PrimeRangeError(SylvesterError, IndexError):
    """Argument lies outside what the prime table covers.

    ``partial`` carries whatever was produced before the bound was hit.
    """

    def __init__(
        self,
        message: str,
        operation: str,
        partial: Optional[Sequence[Any]] = None,
    ):
        self.partial = list(partial) if partial is not None else None
        super().__init__(message, operation)

    @property
    def is_partial(self) -> bool:
        return self.partial is not None


class ResourceLimitError(SylvesterError, MemoryError):
    pass


class DomainError(SylvesterError, KeyError):
    def __str__(self) -> str:
        # KeyError quotes its argument otherwise
        return self.args[0] if self.args else ""


class NotInvertibleError(SylvesterError, ZeroDivisionError):
    pass


class FormulaDomainError(SylvesterError, ValueError):
    pass


class PrecisionError(SylvesterError, ArithmeticError):
    pass


class ReproductionError(SylvesterError, AssertionError):
    def __init__(self, message: str, operation: str, rows: Sequence[Any] = ()):
        self.rows = list(rows)
        super().__init__(message, operation)


class ConfigError(SylvesterError, ValueError):
    pass


class StageFailedError(SylvesterError, RuntimeError):
    def __init__(self, message: str, stage_name: str):
        self.stage_name = stage_name
        super().__init__(message, f"stage '{stage_name}'")


class StageCycleError(SylvesterError, RuntimeError):
    def __init__(self, remaining: Sequence[str]):
        self.remaining = list(remaining)
        super().__init__(
            f"cycle detected, unresolved stages: {self.remaining}", "topological_sort"
        )


# exit code 2: the caller asked for something the configuration cannot serve
USAGE_ERRORS = (
    ConfigError,
    InvalidArgumentError,
    PrimeRangeError,
    ResourceLimitError,
    DomainError,
    FormulaDomainError,
    NotInvertibleError,
)
