"""Solver engines for Olson instances."""
from abc import ABC, abstractmethod
from typing import Callable, Optional, Tuple

from nullsolve.apps.olson.domain.models import OlsonInstance

StepObserver = Callable[[int, object], None]


class OlsonEngine(ABC):
    """Base interface for Olson solving strategies."""

    name = "base"

    @abstractmethod
    def solve(self, inst: OlsonInstance, on_step: Optional[StepObserver] = None) -> Tuple[int, ...]:
        """
        Find a nonempty solution of the instance.

        Args:
            inst: The instance to solve
            on_step: Receives intermediate steps from engines that have them

        Returns:
            Sorted 1-based column indices J

        Raises:
            NoSolution: The engine proved that no solution exists
        """
        pass
