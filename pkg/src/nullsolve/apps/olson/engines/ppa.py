import logging
from typing import Optional, Tuple

from nullsolve.apps.configuration import services as config
from nullsolve.apps.olson.domain.models import OlsonInstance, subset_from_bits
from nullsolve.apps.olson.engines.base import OlsonEngine, StepObserver
from nullsolve.apps.ppa.application.path_service import get_path_service, path_edge_bound
from nullsolve.apps.ppa.application.reductions import general_form_from_olson

logger = logging.getLogger(__name__)


class PathFollowingEngine(OlsonEngine):
    """
    Builds the two-block F_2 instance from kappa coverings and walks its
    End-of-the-Line path. Needs p = 2 and m above the kappa bound.
    """

    name = "ppa"

    def solve(self, inst: OlsonInstance, on_step: Optional[StepObserver] = None) -> Tuple[int, ...]:
        general, _ = general_form_from_olson(inst)
        configured = config.get('ppa_step_cap', 0)
        cap = configured if configured > 0 else path_edge_bound(general)
        result = get_path_service().follow(general, step_cap=cap, on_step=on_step)
        logger.info(f"Path of length {result.length} ends at {result.s}")
        return subset_from_bits(result.s)
