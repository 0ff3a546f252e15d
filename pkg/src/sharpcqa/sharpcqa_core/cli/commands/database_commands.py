"""Handles the database commands of the sharpcqa CLI"""
# pylint: disable=unnecessary-lambda, too-few-public-methods
from argparse import Namespace, _SubParsersAction

from ....encoder import NoPreimage, invert_old_encode
from ....options import read_path_or_literal
from ....qparse import parse_schema, serialize
from ....repairs import count_satisfying
from ...constants import CQA_REPAIR_CAP
from ...exceptions import UsageError
from .. import BaseSharpCQACLICommand
from ..inputs import read_database, read_query


class DatabaseCommands(BaseSharpCQACLICommand):
    """Registers `count` and `invert`"""

    @staticmethod
    def register_subcommand(parser: _SubParsersAction) -> None:
        """Registers the database subcommands.

        Args:
            parser (_SubParsersAction): The parser object to add subcommands to.
        """
        count_parser = parser.add_parser("count", help="Count the repairs of a database that satisfy a query")
        count_parser.add_argument("query", help="query file or query text")
        count_parser.add_argument("database", help="database file or database text")
        count_parser.add_argument(
            "--cap", type=int, default=CQA_REPAIR_CAP, help="largest number of repairs to enumerate"
        )
        count_parser.add_argument("--jobs", "-j", type=int, default=1, help="number of counting threads")
        count_parser.set_defaults(func=lambda args: CountCommand(args))

        invert_parser = parser.add_parser(
            "invert", help="Find the database whose old encoding is the given N-database"
        )
        invert_parser.add_argument("database", help="N-database file or database text")
        invert_parser.add_argument("--schema", "-s", required=True, help="schema file or text")
        invert_parser.set_defaults(func=lambda args: InvertCommand(args))


class CountCommand:
    """Prints #CQA(q) on a database"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Counts by enumerating every repair"""
        if self.args.cap < 1 or self.args.jobs < 1:
            raise UsageError("--cap and --jobs must be positive")
        q = read_query(self.args.query)
        db = read_database(self.args.database, q.schema)
        print(count_satisfying(db, q, self.args.cap, self.args.jobs))


class InvertCommand:
    """Prints the preimage of an N-database under the old encoding, or the fact without a preimage"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Inverts the fact map of the old encoding"""
        schema = parse_schema(read_path_or_literal(self.args.schema))
        result = invert_old_encode(read_database(self.args.database), schema)
        if isinstance(result, NoPreimage):
            print(result)
            print(f"  {result.reason}")
            return
        print(serialize(result))
