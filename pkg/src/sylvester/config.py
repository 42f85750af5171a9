from __future__ import annotations

import os
from typing import Any, Dict, Optional

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ConfigError

STDOUT = "-"


def _default_threads() -> int:
    return os.cpu_count() or 1


class RunConfig(BaseSettings):
    """Knobs shared by every subcommand.

    Values come from CLI flags first, then ``SYLVESTER_*`` environment
    variables, then the defaults below.
    """

    model_config = SettingsConfigDict(env_prefix="SYLVESTER_", frozen=True)

    sieve_limit: int = Field(4_000_200, ge=2)
    c_terms: int = Field(1_000_000, ge=1)
    chunk_size: int = Field(65_536, ge=1)
    output_path: str = STDOUT
    precision_guard: float = Field(1e-12, gt=0.0, lt=1.0)
    threads: int = Field(default_factory=_default_threads, ge=1)

    # memory budget for a single PrimeTable (int32 SPF array: 4 bytes per entry)
    max_sieve_limit: int = Field(100_000_000, ge=2)
    exhaustive_primorial_max: int = Field(7, ge=1, le=8)
    log_level: str = "WARNING"

    @model_validator(mode="after")
    def _sieve_within_budget(self) -> "RunConfig":
        if self.sieve_limit > self.max_sieve_limit:
            raise ValueError(
                f"sieve_limit {self.sieve_limit} exceeds max_sieve_limit {self.max_sieve_limit}"
            )
        return self

    @property
    def writes_stdout(self) -> bool:
        return self.output_path == STDOUT

    def require_sieve_for(self, n_max: int) -> None:
        if self.sieve_limit < 2 * n_max:
            raise ConfigError(
                f"sieve_limit {self.sieve_limit} < 2*{n_max}; raise --sieve-limit "
                f"or SYLVESTER_SIEVE_LIMIT to at least {2 * n_max}",
                "RunConfig",
            )

    def provenance(self) -> Dict[str, Any]:
        return {
            "sieve_limit": self.sieve_limit,
            "c_terms": self.c_terms,
            "threads": self.threads,
        }


def load_config(overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Build a RunConfig, dropping ``None`` overrides so env values survive."""
    kwargs = {k: v for k, v in (overrides or {}).items() if v is not None}
    try:
        return RunConfig(**kwargs)
    except ValueError as e:
        raise ConfigError(str(e), "load_config") from e
