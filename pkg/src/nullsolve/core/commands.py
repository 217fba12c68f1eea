"""Shared plumbing for the nullsolve management commands."""
import logging
from typing import Any, Iterable, List

from django.core.management.base import BaseCommand, CommandError

from nullsolve.core.exceptions import NullsolveError, RangeViolation

logger = logging.getLogger(__name__)


class ReportCommand(BaseCommand):
    """
    Base class for commands that print a line-oriented report.

    Subclasses implement ``run``. Report lines are prefixed ``RESULT `` or
    ``TRACE ``; any NullsolveError becomes one ``ERROR `` line and a
    CommandError carrying the exit code of its family.
    """

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except NullsolveError as e:
            logger.error(f"{self.__module__.rsplit('.', 1)[-1]} failed: {e}", exc_info=True)
            self.stdout.write(f"ERROR {e}")
            raise CommandError(str(e), returncode=e.exit_code) from e

    def run(self, **options: Any) -> None:
        raise NotImplementedError

    def result(self, line: str) -> None:
        self.stdout.write(f"RESULT {line}")

    def trace(self, line: str) -> None:
        self.stdout.write(f"TRACE {line}")


def parse_int_list(text: str, option: str) -> List[int]:
    """Parse a comma or whitespace separated integer list given on the command line."""
    tokens = [t for t in text.replace(",", " ").split() if t]
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise RangeViolation(f"{option} expects integers, got {text!r}")


def format_bits(bits: Iterable[int]) -> str:
    return "".join(str(int(b)) for b in bits)
