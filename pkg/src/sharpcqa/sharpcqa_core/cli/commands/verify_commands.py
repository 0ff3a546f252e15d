"""Handles the verification command of the sharpcqa CLI"""
# pylint: disable=unnecessary-lambda, too-few-public-methods
from argparse import Namespace, _SubParsersAction

from ....enums import Lemma
from ....harness import run_verification
from ....options import VerificationOptions
from ...logger import log
from .. import BaseSharpCQACLICommand

# flags that override the corresponding VerificationOptions field when given
OVERRIDES = {
    "lemma": "lemma",
    "trials": "trials",
    "seed": "seed",
    "max_blocks": "max_blocks",
    "max_block_size": "max_block_size",
    "cap": "repair_cap",
    "jobs": "jobs",
}


class VerifyCommands(BaseSharpCQACLICommand):
    """Registers `verify`"""

    @staticmethod
    def register_subcommand(parser: _SubParsersAction) -> None:
        """Registers the randomized verification of the two reductions.

        Args:
            parser (_SubParsersAction): The parser object to add subcommands to.
        """
        verify_parser = parser.add_parser(
            "verify", help="Check a reduction on seeded random instances against the repair oracle"
        )
        verify_parser.add_argument("--config", "-c", help="JSON or YAML options file or text")
        verify_parser.add_argument(
            "--lemma",
            type=int,
            choices=[lemma.value for lemma in Lemma],
            help="1 for the couple reduction, 2 for the padding reduction",
        )
        verify_parser.add_argument("--trials", "-t", type=int, help="number of random instances")
        verify_parser.add_argument("--seed", type=int, help="run seed")
        verify_parser.add_argument("--max-blocks", type=int, help="largest number of blocks per database")
        verify_parser.add_argument("--max-block-size", type=int, help="largest number of facts per block")
        verify_parser.add_argument("--cap", type=int, help="largest number of repairs to enumerate")
        verify_parser.add_argument("--jobs", "-j", type=int, help="number of worker threads")
        verify_parser.set_defaults(func=lambda args: VerifyCommand(args))


class VerifyCommand:
    """Runs the seeded trials and prints the report"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def options(self) -> VerificationOptions:
        """The options file, if any, with the explicit flags applied on top"""
        options = VerificationOptions.load(self.args.config) if self.args.config else VerificationOptions()
        for flag, name in OVERRIDES.items():
            value = getattr(self.args, flag)
            if value is not None:
                setattr(options, name, value)
        return options

    def run(self) -> None:
        """Prints one reproducer per failing trial, a table per check and the result line"""
        options = self.options()
        log.info(f"Verifying {options.lemma} on {options.trials} instances")  # UX
        report = run_verification(options, progress=True)
        print(report.render())
