from __future__ import annotations

from dataclasses import dataclass, field
from functools import update_wrapper
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
    overload,
    TYPE_CHECKING,
)

from ..errors import SylvesterError, StageFailedError

if TYPE_CHECKING:
    from ..config import RunConfig
    from .registry import StageRegistry

R = TypeVar("R")  # what the stage produces


@dataclass
class Workspace:
    """State one pipeline run threads through its stages.

    ``results`` caches each stage's output by stage name; ``params``
    carries per-run inputs such as the largest n a subcommand needs.
    """

    config: "RunConfig"
    params: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)

    def __getitem__(self, stage_name: str) -> Any:
        return self.results[stage_name]


class Stage(Generic[R]):
    def __init__(
        self,
        fn: Callable[[Workspace], R],
        name: Optional[str] = None,
        description: Optional[str] = None,
        requires: Sequence[str] = (),
        registry: Optional["StageRegistry"] = None,
    ):
        update_wrapper(self, fn)
        self.fn = fn
        self.name = name or fn.__name__
        self.description = description or (fn.__doc__ or "").strip() or None
        self.requires: Tuple[str, ...] = tuple(requires)
        self._registry = registry
        self._register_in_registry()

    @property
    def registry(self) -> "StageRegistry":
        if self._registry is None:
            from .registry import get_stage_registry

            self._registry = get_stage_registry()
        return self._registry

    def _register_in_registry(self) -> None:
        self.registry.register_stage(self)

    def __call__(self, workspace: Workspace) -> R:
        """Run the stage, recording its lifecycle in the registry."""
        registry = self.registry

        try:
            registry.mark_started(self.name)
            result = self.fn(workspace)
            registry.mark_completed(self.name)
            workspace.results[self.name] = result
            return result

        except Exception as e:
            registry.mark_failed(self.name, e)

            if isinstance(e, SylvesterError):
                raise

            raise StageFailedError(f"{type(e).__name__}: {e}", self.name) from e

    def __repr__(self) -> str:
        return f"Stage(name={self.name}, requires={list(self.requires)})"


@overload
def stage(__fn: Callable[[Workspace], R]) -> Stage[R]: ...


@overload
def stage(
    *,
    name: Optional[str] = None,
    description: Optional[str] = None,
    requires: Sequence[str] = (),
    registry: Optional["StageRegistry"] = None,
) -> Callable[[Callable[[Workspace], R]], Stage[R]]: ...


def stage(
    __fn: Optional[Callable[[Workspace], R]] = None,
    *,
    name: Optional[str] = None,
    description: Optional[str] = None,
    requires: Sequence[str] = (),
    registry: Optional["StageRegistry"] = None,
) -> Union[Stage[R], Callable[[Callable[[Workspace], R]], Stage[R]]]:
    if __fn is None:

        def decorator(func: Callable[[Workspace], R]) -> Stage[R]:
            return Stage(
                fn=func,
                name=name,
                description=description,
                requires=requires,
                registry=registry,
            )

        return decorator
    else:
        # Called without arguments: @stage
        return Stage(fn=__fn, name=name, description=description, requires=requires)
