from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Set

from ..errors import StageCycleError


@dataclass
class StageNode:
    stage_name: str
    dependencies: Set[str] = field(default_factory=set)
    dependents: Set[str] = field(default_factory=set)


class StageDAG:
    def __init__(self):
        self.nodes: Dict[str, StageNode] = {}

    def add_stage(self, stage_name: str) -> StageNode:
        """Add a stage node to the DAG if it doesn't exist."""
        if stage_name not in self.nodes:
            self.nodes[stage_name] = StageNode(stage_name=stage_name)
        return self.nodes[stage_name]

    def add_dependency(self, dependent_stage: str, dependency_stage: str) -> None:
        dep_node = self.add_stage(dependent_stage)
        prereq_node = self.add_stage(dependency_stage)

        dep_node.dependencies.add(dependency_stage)
        prereq_node.dependents.add(dependent_stage)

    def topological_sort(self) -> List[str]:
        if not self.nodes:
            return []

        in_degrees = {name: len(node.dependencies) for name, node in self.nodes.items()}

        # sorted seeds and successors keep the order reproducible
        queue = deque(sorted(name for name, degree in in_degrees.items() if degree == 0))
        result = []

        while queue:
            current = queue.popleft()
            result.append(current)

            for dependent in sorted(self.nodes[current].dependents):
                in_degrees[dependent] -= 1
                if in_degrees[dependent] == 0:
                    queue.append(dependent)

        if len(result) != len(self.nodes):
            raise StageCycleError([name for name in self.nodes if name not in result])

        return result

    def ancestors(self, stage_name: str) -> Set[str]:
        """All stages the given one transitively depends on."""
        seen: Set[str] = set()
        stack = list(self.nodes[stage_name].dependencies)
        while stack:
            name = stack.pop()
            if name in seen:
                continue
            seen.add(name)
            stack.extend(self.nodes[name].dependencies)
        return seen

    def execution_order(self, target: str) -> List[str]:
        """Topological order restricted to the target and its ancestors."""
        wanted = self.ancestors(target) | {target}
        return [name for name in self.topological_sort() if name in wanted]
