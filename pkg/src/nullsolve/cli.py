"""
The ``nullsolve`` console script.

``nullsolve solve-olson FILE`` runs the ``solve_olson`` management command;
every subcommand maps onto a command of the same name with underscores.
"""
import os
import sys
from typing import List, Optional

SUBCOMMANDS = (
    'kappa',
    'solve-olson',
    'divisible-subgraph',
    'f-avoiding',
    'ppa-run',
    'explicit-cn',
    'f-oracle',
    'selftest',
)

USAGE = "usage: nullsolve {" + ",".join(SUBCOMMANDS) + "} [options]"


def main(argv: Optional[List[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if not args or args[0] in ('-h', '--help'):
        print(USAGE)
        return 0 if args else 2
    if args[0] not in SUBCOMMANDS:
        print(f"ERROR unknown subcommand '{args[0]}'")
        print(USAGE, file=sys.stderr)
        return 2

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'nullsolve.config.django_settings')
    import django
    from django.core.management import execute_from_command_line

    django.setup()
    command = args[0].replace('-', '_')
    try:
        execute_from_command_line(['nullsolve', command] + args[1:])
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
