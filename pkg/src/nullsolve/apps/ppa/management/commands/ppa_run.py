"""Command to solve a general-form instance by following the End-of-the-Line path."""
import logging

from nullsolve.apps.ppa.application.path_service import get_path_service
from nullsolve.apps.ppa.infrastructure.formats import parse_general_form
from nullsolve.apps.ppa.infrastructure.trace import format_step, replay_trace
from nullsolve.core.commands import ReportCommand, format_bits
from nullsolve.core.instance_files import read_text

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Follow the End-of-the-Line path of a genpoly instance to a point where f is nonzero'

    def add_arguments(self, parser):
        parser.add_argument('file', help='genpoly instance file')
        parser.add_argument('--trace', action='store_true', help='Print every (node, edge, mate) step')
        parser.add_argument('--step-cap', type=int, default=None,
                            help='Maximum path length (default: ppa_step_cap or 2^(m+4))')
        parser.add_argument('--replay', default=None, help='Check a saved trace instead of solving')

    def run(self, **options):
        inst = parse_general_form(read_text(options['file']))

        if options['replay']:
            steps = replay_trace(inst, read_text(options['replay']).splitlines())
            self.result(f"replay ok, path length {steps}")
            return

        trace_lines = []
        on_step = (lambda k, step: trace_lines.append(format_step(k, step))) if options['trace'] else None
        result = get_path_service().follow(inst, options['step_cap'], on_step)

        for line in trace_lines:
            self.trace(line)
        self.result(f"s = {format_bits(result.s)}, f(s) = 1, path length {result.length}")
        self.result(f"path {result.render_path()}")
