"""CLI script to run sharpcqa commands using argparse."""
import sys
from argparse import ArgumentParser
from typing import NoReturn, Optional

from ..constants import SHARPCQA_VERSION
from ..exceptions import SchemaError, SharpCQAError, UsageError
from ..logger import log
from .commands.classify_commands import ClassifyCommands
from .commands.database_commands import DatabaseCommands
from .commands.demo_commands import DemoCommands
from .commands.query_commands import QueryCommands
from .commands.verify_commands import VerifyCommands


class SharpCQAArgumentParser(ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(UsageError.exit_code, f"{self.prog}: error: {message}\n")


def build_parser() -> ArgumentParser:
    """The sharpcqa parser with every command family registered"""
    parser = SharpCQAArgumentParser("sharpcqa", usage="sharpcqa <command> [<args>]")
    commands_parser = parser.add_subparsers(help="sharpcqa commands")

    # Register commands
    ClassifyCommands.register_subcommand(commands_parser)
    DatabaseCommands.register_subcommand(commands_parser)
    QueryCommands.register_subcommand(commands_parser)
    VerifyCommands.register_subcommand(commands_parser)
    DemoCommands.register_subcommand(commands_parser)

    parser.add_argument("--version", "-v", action="store_true", help="show sharpcqa version")

    # pylint: disable-next=too-few-public-methods, missing-class-docstring
    class _Default:
        # pylint: disable-next=missing-function-docstring
        def run(self) -> None:
            parser.print_help()

    parser.set_defaults(func=lambda _: _Default())
    return parser


def main(argv: Optional[list[str]] = None) -> None:
    """Main function to set up and run sharpcqa commands.

    Exits with status 1 on usage and parse errors and with status 2 on precondition and resource errors.
    """
    args = build_parser().parse_args(argv)

    if args.version:
        print(f"sharpcqa {SHARPCQA_VERSION}")
        return

    command = args.func(args)
    try:
        command.run()
    except SharpCQAError as e:
        log.error(e)
        sys.exit(e.exit_code)
    except SchemaError as e:
        log.error(e)
        sys.exit(UsageError.exit_code)


if __name__ == "__main__":
    main()
