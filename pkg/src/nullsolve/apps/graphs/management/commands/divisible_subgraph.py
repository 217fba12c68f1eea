"""Command to find a nonempty subgraph with every degree divisible by 2^d."""
import logging

from nullsolve.apps.graphs.application import SUBGRAPH_ENGINES, get_subgraph_service
from nullsolve.apps.graphs.domain.graphs import threshold
from nullsolve.apps.graphs.infrastructure.formats import parse_graph
from nullsolve.core.commands import ReportCommand
from nullsolve.core.instance_files import read_text

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Find a nonempty edge subset whose degrees are all divisible by 2^d'

    def add_arguments(self, parser):
        parser.add_argument('file', help='graph instance file')
        parser.add_argument('--d', type=int, required=True, help='Exponent d (degrees divisible by 2^d)')
        parser.add_argument('--engine', choices=SUBGRAPH_ENGINES, default='brute', help='Solver engine')

    def run(self, **options):
        graph = parse_graph(read_text(options['file']))
        d = options['d']
        self.result(f"threshold f({graph.n}, {2 ** d}) = {threshold(graph.n, 2, d)}, edges = {graph.size}")

        subset = get_subgraph_service().divisible_subgraph(graph, d, options['engine'])
        self.result("edges = {" + ",".join(str(k) for k in subset) + "}")
        for k in subset:
            u, v = graph.edge(k)
            self.result(f"edge {k}: {u} {v}")
        degrees = graph.degrees(subset)
        self.result("degrees " + " ".join(f"{v}:{degrees[v]}" for v in sorted(degrees)))
