"""Command to compute kappa(B) and the covering family that attains it."""
import logging

from nullsolve.apps.covering.domain.covering import (
    alon_bound, build_kappa_covering, covers, kappa
)
from nullsolve.apps.covering.domain.ivpoly import evaluate
from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.core.commands import ReportCommand, parse_int_list
from nullsolve.core.exceptions import VerificationFailed

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Compute kappa(B) for B inside Z_{p^d} and print a covering family of that degree'

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True, help='Prime p')
        parser.add_argument('--d', type=int, required=True, help='Exponent d (modulus p^d)')
        parser.add_argument('--set', dest='elements', default='', help='Comma separated residues b1,b2,...')

    def run(self, **options):
        b = ResidueSet(options['p'], options['d'], frozenset(parse_int_list(options['elements'], '--set')))
        value = kappa(b)
        self.result(f"kappa = {value}")

        family = build_kappa_covering(b)
        self.result(f"alon bound = {alon_bound(b)}")
        self.result(f"family size = {len(family)}, total degree = {family.total_degree}")
        for i, h in enumerate(family, start=1):
            roots = ",".join(str(q) for q in h.roots)
            self.result(f"h{i} roots=({roots}) delta={h.delta} h(0)={evaluate(h, 0)}")

        for x in b:
            hits = [i for i, h in enumerate(family, start=1) if evaluate(h, x) % b.p == 0]
            self.result(f"cover {x}: " + (",".join(f"h{i}" for i in hits) or "-"))

        if not covers(family, b) or family.total_degree != value:
            raise VerificationFailed(f"covering of {b} failed verification")
        self.result("coverage verified")
