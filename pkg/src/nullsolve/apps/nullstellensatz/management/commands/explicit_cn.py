"""Command to run the explicit-form Nullstellensatz solver on a genpoly file."""
import logging

from nullsolve.apps.nullstellensatz.domain.lift import solve_explicit_cn
from nullsolve.apps.nullstellensatz.domain.models import bits_to_code
from nullsolve.apps.ppa.application.reductions import expand_general_form
from nullsolve.apps.ppa.infrastructure.formats import parse_general_form
from nullsolve.core.commands import ReportCommand, format_bits
from nullsolve.core.instance_files import read_text

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Expand a genpoly instance over F_2 and find s with f(s) != 0 by successive substitution'

    def add_arguments(self, parser):
        parser.add_argument('file', help='genpoly instance file')

    def run(self, **options):
        inst = parse_general_form(read_text(options['file']))
        f = expand_general_form(inst)
        logger.info(f"Expanded {inst.k} blocks into {len(f.coeffs)} monomials")
        s = solve_explicit_cn(f, inst.m)
        self.result(f"monomials = {len(f.coeffs)}")
        self.result(f"s = {format_bits(s)}, f(s) = {f.evaluate(bits_to_code(s), 2)}")
