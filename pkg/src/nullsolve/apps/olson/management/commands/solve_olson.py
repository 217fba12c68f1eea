"""Command to solve an Olson instance file."""
import logging

from nullsolve.apps.olson.application import get_olson_service
from nullsolve.apps.olson.domain.olson import kappa_bound
from nullsolve.apps.olson.engines import ENGINES
from nullsolve.apps.olson.infrastructure.formats import parse_olson
from nullsolve.apps.ppa.infrastructure.trace import format_step
from nullsolve.core.commands import ReportCommand
from nullsolve.core.instance_files import read_text

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Find a nonempty column subset J whose sums land in every target set'

    def add_arguments(self, parser):
        parser.add_argument('file', help='olson instance file')
        parser.add_argument('--engine', choices=ENGINES, default='brute', help='Solver engine')
        parser.add_argument('--trace', action='store_true', help='Print the path steps of the ppa engine')

    def run(self, **options):
        inst = parse_olson(read_text(options['file']))
        logger.debug(f"kappa bound {kappa_bound(inst.p, inst.d, inst.q)} for m = {inst.m}")

        trace_lines = []
        on_step = (lambda k, step: trace_lines.append(format_step(k, step))) if options['trace'] else None
        subset = get_olson_service().solve_olson(inst, options['engine'], on_step)

        for line in trace_lines:
            self.trace(line)
        self.result("J = {" + ",".join(str(j) for j in subset) + "}")
        for i, residue in enumerate(inst.residues(subset), start=1):
            self.result(f"row {i}: sum = {residue} mod {inst.modulus(i - 1)}, in Q_{i}")
