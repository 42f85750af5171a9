from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Iterator, List, Optional, Tuple, TypeVar

from ..errors import InvalidArgumentError, StageFailedError
from ..log import get_logger
from .registry import StageRegistry, get_stage_registry
from .stages import Workspace

logger = get_logger("SCHEDULER")

T = TypeVar("T")
A = TypeVar("A")


class StageScheduler:
    """Runs a stage after everything it depends on, reusing cached results."""

    def __init__(self, registry: Optional[StageRegistry] = None):
        self.registry = registry or get_stage_registry()

    def execution_plan(self, target: str) -> List[str]:
        if self.registry.get_stage(target) is None:
            raise StageFailedError("stage not registered", target)
        return self.registry.dag.execution_order(target)

    def run(self, target: str, workspace: Workspace) -> Any:
        plan = self.execution_plan(target)
        logger.info(f"Execution plan: {' -> '.join(plan)}")

        for stage_name in plan:
            if stage_name in workspace.results:
                logger.debug(f"Cached: {stage_name}")
                continue
            stage = self.registry.get_stage(stage_name)
            if stage is None:
                raise StageFailedError("required stage not registered", stage_name)
            stage(workspace)

        return workspace.results[target]


def split_range(lo: int, hi: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Inclusive [lo, hi] cut into consecutive inclusive chunks."""
    if chunk_size < 1:
        raise InvalidArgumentError(f"chunk_size must be >= 1, got {chunk_size}", "split_range")
    return [(start, min(start + chunk_size - 1, hi)) for start in range(lo, hi + 1, chunk_size)]


class ChunkScheduler:
    """Data-parallel map over range chunks.

    Workers share read-only state (numpy releases the GIL in the heavy
    kernels), and results always come back in ascending chunk order.
    """

    def __init__(self, threads: int = 1, chunk_size: int = 65_536):
        if threads < 1:
            raise InvalidArgumentError(f"threads must be >= 1, got {threads}", "ChunkScheduler")
        self.threads = threads
        self.chunk_size = chunk_size

    def map_ranges(self, fn: Callable[[int, int], T], lo: int, hi: int) -> Iterator[T]:
        chunks = split_range(lo, hi, self.chunk_size)
        logger.debug(f"{len(chunks)} chunks over [{lo}, {hi}] on {self.threads} threads")

        if self.threads == 1 or len(chunks) <= 1:
            for start, stop in chunks:
                yield fn(start, stop)
            return

        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            yield from pool.map(lambda chunk: fn(*chunk), chunks)

    def reduce_ranges(
        self,
        fn: Callable[[int, int], T],
        lo: int,
        hi: int,
        combine: Callable[[A, T], A],
        initial: A,
    ) -> A:
        accumulated = initial
        for partial in self.map_ranges(fn, lo, hi):
            accumulated = combine(accumulated, partial)
        return accumulated
