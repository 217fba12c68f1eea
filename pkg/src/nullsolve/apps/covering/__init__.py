from nullsolve.apps.covering.domain.covering import (
    alon_bound, alon_cover, build_alon_covering, build_kappa_covering, card_p, covered_set,
    covers, digits, kappa, kappa_levels, modp_covering, price_upper_bound, r_zero_set,
    residue_system_cover, sigma
)
from nullsolve.apps.covering.domain.ivpoly import (
    FactoredIVP, IVPoly, eval_binomial, eval_factored, evaluate, is_unit_at_zero,
    to_binomial_basis
)
from nullsolve.apps.covering.domain.models import CoveringFamily, ResidueSet

__all__ = [
    'CoveringFamily',
    'FactoredIVP',
    'IVPoly',
    'ResidueSet',
    'alon_bound',
    'alon_cover',
    'build_alon_covering',
    'build_kappa_covering',
    'card_p',
    'covered_set',
    'covers',
    'digits',
    'eval_binomial',
    'eval_factored',
    'evaluate',
    'is_unit_at_zero',
    'kappa',
    'kappa_levels',
    'modp_covering',
    'price_upper_bound',
    'r_zero_set',
    'residue_system_cover',
    'sigma',
    'to_binomial_basis',
]
