from .stages import stage, Stage, Workspace
from .dag import StageDAG, StageNode
from .registry import StageRegistry, get_stage_registry
from .scheduler import StageScheduler, ChunkScheduler, split_range

__all__ = [
    # Core decorator
    "stage",
    # Core classes
    "Stage",
    "Workspace",
    # Stage registry and schedulers
    "StageRegistry",
    "get_stage_registry",
    "StageScheduler",
    "ChunkScheduler",
    "split_range",
    # DAG system
    "StageDAG",
    "StageNode",
]
