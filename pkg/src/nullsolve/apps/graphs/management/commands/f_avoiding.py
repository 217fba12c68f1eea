"""Command to find a nonempty subgraph whose degrees avoid forbidden values."""
import logging

from nullsolve.apps.covering.domain.models import ResidueSet
from nullsolve.apps.graphs.application import get_subgraph_service
from nullsolve.apps.graphs.infrastructure.formats import parse_forbidden, parse_graph
from nullsolve.apps.olson.engines import ENGINES
from nullsolve.core.commands import ReportCommand
from nullsolve.core.exceptions import RangeViolation
from nullsolve.core.instance_files import read_text

logger = logging.getLogger(__name__)


def parse_modulus(text: str):
    """'P^D' or 'P' -> (P, D)."""
    base, _, exponent = text.partition("^")
    try:
        return int(base), int(exponent) if exponent else 1
    except ValueError:
        raise RangeViolation(f"--mod expects P^D, got {text!r}")


class Command(ReportCommand):
    help = 'Find a nonempty edge subset whose degree at each vertex avoids its forbidden set'

    def add_arguments(self, parser):
        parser.add_argument('file', help='graph instance file')
        mode = parser.add_mutually_exclusive_group(required=True)
        mode.add_argument('--mod', default=None, help='Work modulo P^D, e.g. 2^1')
        mode.add_argument('--natural', action='store_true', help='Forbid natural degree values')
        parser.add_argument('--forbid', default='', help="Forbidden sets 'v:a,b;w:c'")
        parser.add_argument('--engine', choices=ENGINES, default='brute', help='Solver engine')

    def run(self, **options):
        graph = parse_graph(read_text(options['file']))
        forbidden = parse_forbidden(options['forbid'])
        service = get_subgraph_service()

        if options['natural']:
            subset = service.f_avoiding_natural(graph, forbidden, options['engine'])
        else:
            p, d = parse_modulus(options['mod'])
            sets = {v: ResidueSet.from_integers(p, d, values) for v, values in forbidden.items()}
            subset = service.f_avoiding_mod(graph, sets, p, d, options['engine'])

        self.result("edges = {" + ",".join(str(k) for k in subset) + "}")
        degrees = graph.degrees(subset)
        self.result("degrees " + " ".join(f"{v}:{degrees[v]}" for v in sorted(degrees)))
