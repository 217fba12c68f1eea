"""Application service following the End-of-the-Line path from the standard leaf."""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from nullsolve.apps.configuration import services as config
from nullsolve.apps.ppa.domain.models import LEAF, Edge, GeneralFormPoly, PPANode, Vector
from nullsolve.apps.ppa.domain.pairing import mate, term_count
from nullsolve.apps.ppa.domain.validation import validate_instance
from nullsolve.core.exceptions import StepCapExceeded, VerificationFailed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathStep:
    """``node`` reached through ``arrival``; ``departure`` is its mate, None when unmatched."""

    node: PPANode
    arrival: Edge
    departure: Optional[Edge]


@dataclass
class PathResult:
    s: Tuple[int, ...]
    steps: List[PathStep] = field(default_factory=list)

    @property
    def length(self) -> int:
        """Edges traversed."""
        return len(self.steps) - 1

    @property
    def nodes(self) -> List[PPANode]:
        return [step.node for step in self.steps]

    def render_path(self) -> str:
        return " -> ".join(str(node) for node in self.nodes)


def default_step_cap(m: int) -> int:
    configured = config.get('ppa_step_cap', 0)
    return configured if configured > 0 else 1 << (m + 4)


def path_edge_bound(inst: GeneralFormPoly) -> int:
    """
    Edges in the whole graph: every edge joins a term to one of the 2^m
    vectors or to the leaf. A path never reuses an edge.
    """
    return term_count(inst) * ((1 << inst.m) + 1)


class PathFollowingService:
    """Solves general-form instances by walking the pairing function."""

    def follow(
            self,
            inst: GeneralFormPoly,
            step_cap: Optional[int] = None,
            on_step: Optional[Callable[[int, PathStep], None]] = None
    ) -> PathResult:
        """
        Walk from w along its unmatched edge until a node has no mate.

        Args:
            inst: A general-form instance; validated first
            step_cap: Maximum edges to traverse; defaults to ppa_step_cap or 2^(m+4)
            on_step: Called with (index, step) for every node reached

        Returns:
            The terminal vector s (with f(s) = 1) and the full path
        """
        validate_instance(inst).raise_for_certificate()
        cap = step_cap if step_cap and step_cap > 0 else default_step_cap(inst.m)

        start = Edge(inst.leftover, LEAF)
        steps = [PathStep(LEAF, start, None)]
        if on_step:
            on_step(0, steps[0])

        node: PPANode = LEAF
        edge = start
        while True:
            if len(steps) > cap:
                raise StepCapExceeded(f"no end of the line within {cap} steps")
            node = edge.other(node)
            departure = mate(inst, node, edge)
            step = PathStep(node, edge, departure)
            steps.append(step)
            if on_step:
                on_step(len(steps) - 1, step)
            if departure is None:
                break
            if departure == start:
                raise VerificationFailed("the path returned to the leaf's unmatched edge")
            edge = departure

        if not isinstance(node, Vector):
            raise VerificationFailed(f"path ended at {node}, which is not a vector")
        if inst.value(node.code) != 1:
            raise VerificationFailed(f"path ended at {node} but f{node} = 0")

        result = PathResult(node.bits, steps)
        logger.info(f"End of the line at {node} after {result.length} steps")
        return result


def follow_path(inst: GeneralFormPoly, step_cap: Optional[int] = None) -> PathResult:
    return get_path_service().follow(inst, step_cap)


# Singleton instance for application-wide use
_path_service = None


def get_path_service() -> PathFollowingService:
    """Get or create the path-following service singleton."""
    global _path_service
    if _path_service is None:
        _path_service = PathFollowingService()
    return _path_service
