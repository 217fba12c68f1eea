"""Command to compute F(d, Q) exactly for tiny parameters."""
import logging

from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.olson.domain.olson import alon_friedland_kalai_bound, kappa_bound, olson_value
from nullsolve.apps.olson.domain.oracle import F_exact
from nullsolve.core.commands import ReportCommand, parse_int_list
from nullsolve.core.exceptions import RangeViolation

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Exact F(d, Q): the longest sequence with no nonempty subsum in Q_1 x ... x Q_n'

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True, help='Prime p')
        parser.add_argument('--d', required=True, help='Exponents d_1,...,d_n')
        parser.add_argument('--q', default=None,
                            help="Target sets separated by ';', e.g. '0;0,2' (default {0} for every row)")
        parser.add_argument('--m-cap', type=int, default=12, help='Largest m searched')

    def run(self, **options):
        p = options['p']
        d = parse_int_list(options['d'], '--d')
        if options['q'] is None:
            groups = ["0"] * len(d)
        else:
            groups = options['q'].split(";")
        if len(groups) != len(d):
            raise RangeViolation(f"--q gives {len(groups)} sets for {len(d)} exponents")
        q = [ResidueSet(p, di, frozenset(parse_int_list(g, '--q'))) for di, g in zip(d, groups)]

        value = F_exact(p, d, q, options['m_cap'])
        self.result(f"F = {value}")
        self.result(f"kappa bound = {kappa_bound(p, d, q)}")
        self.result(f"alon-friedland-kalai bound = {alon_friedland_kalai_bound(p, d, q)}")
        if all(qi.elems == frozenset({0}) for qi in q):
            self.result(f"olson value = {olson_value(p, d)}")
