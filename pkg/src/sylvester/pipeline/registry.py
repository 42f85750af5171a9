from __future__ import annotations

import time
from threading import Lock
from typing import Any, Dict, List, Optional, TYPE_CHECKING

from ..log import get_logger
from .dag import StageDAG

if TYPE_CHECKING:
    from .stages import Stage

logger = get_logger("REGISTRY")


class StageRegistry:
    def __init__(self):
        self._lock = Lock()
        self._stages: Dict[str, "Stage"] = {}
        self._dag = StageDAG()
        self._history: List[Dict[str, Any]] = []
        self._active: Dict[str, float] = {}

    @property
    def dag(self) -> StageDAG:
        return self._dag

    def register_stage(self, stage: "Stage") -> None:
        with self._lock:
            if stage.name in self._stages and self._stages[stage.name] is not stage:
                logger.debug(f"Replacing stage definition: {stage.name}")
            self._stages[stage.name] = stage
            self._dag.add_stage(stage.name)
            for requirement in stage.requires:
                self._dag.add_dependency(stage.name, requirement)
            logger.debug(f"Registered stage: {stage.name}")

    def get_stage(self, name: str) -> Optional["Stage"]:
        return self._stages.get(name)

    def mark_started(self, stage_name: str) -> None:
        with self._lock:
            self._active[stage_name] = time.perf_counter()
            logger.info(f"Stage started: {stage_name}")

    def _finish(self, stage_name: str, event: str, error: Optional[Exception]) -> float:
        started = self._active.pop(stage_name, None)
        elapsed = time.perf_counter() - started if started is not None else 0.0
        record: Dict[str, Any] = {"stage": stage_name, "event": event, "seconds": elapsed}
        if error is not None:
            record["error"] = str(error)
        self._history.append(record)
        return elapsed

    def mark_completed(self, stage_name: str) -> None:
        with self._lock:
            elapsed = self._finish(stage_name, "completed", None)
            logger.info(f"Stage completed: {stage_name} ({elapsed:.3f}s)")

    def mark_failed(self, stage_name: str, error: Exception) -> None:
        with self._lock:
            elapsed = self._finish(stage_name, "failed", error)
            logger.warning(f"Stage failed: {stage_name} after {elapsed:.3f}s: {error}")

    def active_stages(self) -> List[str]:
        with self._lock:
            return sorted(self._active)

    def history(self) -> List[Dict[str, Any]]:
        with self._lock:
            return list(self._history)


_stage_registry: Optional[StageRegistry] = None


def get_stage_registry() -> StageRegistry:
    global _stage_registry
    if _stage_registry is None:
        _stage_registry = StageRegistry()
    return _stage_registry
