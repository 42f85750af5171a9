"""The shared stages every subcommand draws on.

``sieve`` builds the PrimeTable at the configured limit; ``constant_table``
builds one big enough for ``c_terms`` odd primes; ``twin_constant``
computes c from it; ``goldbach`` runs the bulk convolution up to the
``n_max`` parameter of the workspace.
"""

from __future__ import annotations

from typing import Any, Dict, Optional

from .comet import GoldbachCounts, TwinPrimeConstant, goldbach_counts, twin_prime_constant
from .config import RunConfig
from .errors import InvalidArgumentError
from .pipeline import ChunkScheduler, StageScheduler, Workspace, stage
from .primes import PrimeTable, build_table, prime_limit_for_count


@stage(name="sieve", description="Prime table at sieve_limit")
def sieve(workspace: Workspace) -> PrimeTable:
    config = workspace.config
    return build_table(config.sieve_limit, max_limit=config.max_sieve_limit)


@stage(name="constant_table", description="Prime table holding c_terms odd primes")
def constant_table(workspace: Workspace) -> PrimeTable:
    config = workspace.config
    limit = prime_limit_for_count(config.c_terms + 1)
    shared: Optional[PrimeTable] = workspace.results.get("sieve")
    if shared is not None and shared.odd_prime_count >= config.c_terms:
        return shared
    return build_table(max(limit, 3), max_limit=config.max_sieve_limit)


@stage(name="twin_constant", requires=["constant_table"])
def twin_constant(workspace: Workspace) -> TwinPrimeConstant:
    """c as the partial product over c_terms odd primes."""
    return twin_prime_constant(workspace.config.c_terms, workspace["constant_table"])


@stage(name="goldbach", requires=["sieve"])
def goldbach(workspace: Workspace) -> GoldbachCounts:
    """Exact g(n) for n <= n_max."""
    n_max = workspace.params.get("n_max")
    if n_max is None:
        raise InvalidArgumentError("workspace has no n_max parameter", "goldbach")
    workspace.config.require_sieve_for(n_max)
    return goldbach_counts(n_max, workspace["sieve"])


class Session:
    """One configured run: a workspace plus the schedulers that feed it."""

    def __init__(self, config: RunConfig, **params: Any):
        self.config = config
        self.workspace = Workspace(config=config, params=dict(params))
        self.stages = StageScheduler()
        self.chunks = ChunkScheduler(threads=config.threads, chunk_size=config.chunk_size)

    def table(self) -> PrimeTable:
        return self.stages.run("sieve", self.workspace)

    def constant(self) -> TwinPrimeConstant:
        return self.stages.run("twin_constant", self.workspace)

    def counts(self, n_max: int) -> GoldbachCounts:
        cached: Optional[GoldbachCounts] = self.workspace.results.get("goldbach")
        if cached is not None and cached.n_max >= n_max:
            return cached
        self.workspace.results.pop("goldbach", None)
        self.workspace.params["n_max"] = n_max
        return self.stages.run("goldbach", self.workspace)

    def provenance(self) -> Dict[str, Any]:
        return self.config.provenance()
