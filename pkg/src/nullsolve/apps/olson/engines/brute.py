import logging
from typing import Optional, Tuple

from nullsolve.apps.nullstellensatz.domain.lift import brute_force_cn
from nullsolve.apps.olson.domain.models import OlsonInstance, subset_from_bits
from nullsolve.apps.olson.domain.olson import constraint_polys, kappa_bound
from nullsolve.apps.olson.engines.base import OlsonEngine, StepObserver
from nullsolve.core.exceptions import NoSolution, VerificationFailed

logger = logging.getLogger(__name__)


class BruteForceEngine(OlsonEngine):
    """Exhaustive search over column subsets, smallest code first."""

    name = "brute"

    def solve(self, inst: OlsonInstance, on_step: Optional[StepObserver] = None) -> Tuple[int, ...]:
        try:
            bits = brute_force_cn(constraint_polys(inst), inst.q, inst.m)
        except NoSolution:
            bound = kappa_bound(inst.p, inst.d, inst.q)
            if inst.m <= bound:
                raise NoSolution(
                    f"no solution (extremal instance): m = {inst.m} does not exceed the kappa bound {bound}"
                )
            raise VerificationFailed(f"no solution although m = {inst.m} exceeds the kappa bound {bound}")
        return subset_from_bits(bits)
