"""Application service solving Olson instances with a selectable engine."""
import logging
from typing import Optional, Tuple

from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.apps.olson.domain.olson import reduce_even_sum
from nullsolve.apps.olson.engines import OlsonEngineFactory, StepObserver
from nullsolve.core.exceptions import VerificationFailed

logger = logging.getLogger(__name__)


class OlsonService:
    """Runs an engine on an instance and re-checks its answer."""

    def solve_olson(
            self,
            inst: OlsonInstance,
            engine: str = "brute",
            on_step: Optional[StepObserver] = None
    ) -> Tuple[int, ...]:
        """
        Find a nonempty J with sum_{j in J} a_ij mod p^{d_i} in Q_i for all i.

        Args:
            inst: The instance
            engine: 'brute' or 'ppa'
            on_step: Receives path steps from the ppa engine

        Returns:
            Sorted 1-based column indices
        """
        solver = OlsonEngineFactory.create_engine(engine)
        logger.info(f"Solving Olson instance p = {inst.p}, d = {inst.d}, m = {inst.m} with {solver.name}")
        subset = solver.solve(inst, on_step)
        if not inst.is_solution(subset):
            raise VerificationFailed(f"engine {solver.name} returned {subset}, which is not a solution")
        return subset

    def solve_even_sum(self, inst: OlsonInstance, engine: str = "brute") -> Tuple[int, ...]:
        """
        Solve the even-sum reduction of ``inst`` and check the answer against
        the original rows at their original moduli.
        """
        subset = self.solve_olson(reduce_even_sum(inst), engine)
        if not inst.is_solution(subset):
            raise VerificationFailed(f"{subset} solves the reduced instance but not the original")
        return subset


# Singleton instance for application-wide use
_olson_service = None


def get_olson_service() -> OlsonService:
    """Get or create the Olson service singleton."""
    global _olson_service
    if _olson_service is None:
        _olson_service = OlsonService()
    return _olson_service


def solve_olson(inst: OlsonInstance, engine: str = "brute") -> Tuple[int, ...]:
    return get_olson_service().solve_olson(inst, engine)
