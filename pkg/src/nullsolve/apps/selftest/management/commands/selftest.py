"""Command to run the acceptance checks."""
import logging

from nullsolve.apps.selftest.checks import CHECKS, run_checks
from nullsolve.core.commands import ReportCommand
from nullsolve.core.exceptions import VerificationFailed

logger = logging.getLogger(__name__)


class Command(ReportCommand):
    help = 'Run the acceptance checks'

    def add_arguments(self, parser):
        parser.add_argument('--seed', type=int, default=0, help='Seed for the random instances')
        parser.add_argument('--only', nargs='*', default=None,
                            choices=[check.__name__[len("check_"):] for check in CHECKS],
                            help='Run only the named checks')

    def run(self, **options):
        results = run_checks(options['seed'], options['only'])
        for result in results:
            status = "ok" if result.passed else "FAILED"
            self.result(f"{result.name}: {status} ({result.detail})")

        failed = [r.name for r in results if not r.passed]
        if failed:
            raise VerificationFailed(f"{len(failed)} of {len(results)} checks failed: {', '.join(failed)}")
        self.result(f"all {len(results)} checks passed")
