"""Building general-form instances and expanding them."""
import logging
from typing import List, Tuple

from nullsolve.apps.covering.domain.covering import build_kappa_covering
from nullsolve.apps.covering.domain.models import CoveringFamily
from nullsolve.apps.nullstellensatz.domain.lift import main_polynomial_factors
from nullsolve.apps.nullstellensatz.domain.models import IntMultiPoly, Monomial
from nullsolve.apps.olson.domain.models import OlsonInstance
from nullsolve.apps.olson.domain.olson import constraint_polys
from nullsolve.apps.ppa.domain.models import ExplicitPoly, GeneralFormPoly, TermTuple
from nullsolve.core.exceptions import EngineUnsupported

logger = logging.getLogger(__name__)


def explicit_poly(f: IntMultiPoly) -> ExplicitPoly:
    """The monomials with odd coefficient, in increasing mask order."""
    return tuple(monomial for monomial, c in f.monomials() if c % 2)


def general_form_from_olson(inst: OlsonInstance) -> Tuple[GeneralFormPoly, List[CoveringFamily]]:
    """
    The two-block instance prod Psi^h(f_i) + prod (x_j + 1) over F_2.

    Block 1 has degree below m, so the only occurrence of x_1...x_m is the
    all-x_j choice in block 2, which becomes the designated leftover. Every
    nonzero point of the sum is a solution of the instance.
    """
    if inst.p != 2:
        raise EngineUnsupported(f"the path-following engine needs p = 2, got p = {inst.p}")

    families = [build_kappa_covering(qc) for qc in inst.complements()]
    factors, _ = main_polynomial_factors(constraint_polys(inst), families, 2, inst.m)

    lifted = tuple(explicit_poly(factor) for factor in factors) or ((Monomial(),),)
    linear = tuple((Monomial.of(j), Monomial()) for j in range(1, inst.m + 1))
    leftover = TermTuple(2, (1,) * inst.m)
    general = GeneralFormPoly(inst.m, (lifted, linear), (), leftover)
    logger.info(
        f"General form from Olson instance: m = {inst.m}, {len(lifted)} lifted factors, "
        f"covering degrees {[family.total_degree for family in families]}"
    )
    return general, families


def expand_general_form(inst: GeneralFormPoly) -> IntMultiPoly:
    """sum over blocks of prod p_ij, expanded with coefficients in {0, 1}."""
    total = IntMultiPoly(inst.m)
    for block in inst.blocks:
        product = IntMultiPoly.constant(inst.m, 1)
        for poly in block:
            product = (product * IntMultiPoly.from_monomials(inst.m, poly)).mod(2)
        total = (total + product).mod(2)
    return total
