"""Handles the demonstration command of the sharpcqa CLI"""
# pylint: disable=unnecessary-lambda, too-few-public-methods
from argparse import Namespace, _SubParsersAction

from .. import BaseSharpCQACLICommand
from ..demo import flaw_report


class DemoCommands(BaseSharpCQACLICommand):
    """Registers `demo-flaw`"""

    @staticmethod
    def register_subcommand(parser: _SubParsersAction) -> None:
        """Registers the flaw demonstration.

        Args:
            parser (_SubParsersAction): The parser object to add subcommands to.
        """
        demo_parser = parser.add_parser(
            "demo-flaw", help="Show why padding non-key positions with zeros breaks the encoding reduction"
        )
        demo_parser.set_defaults(func=lambda args: DemoCommand(args))


class DemoCommand:
    """Prints the flaw demonstration"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Prints the report, identical on every run"""
        print(flaw_report())
