"""Handles the query transformation commands of the sharpcqa CLI"""
# pylint: disable=unnecessary-lambda, too-few-public-methods
from argparse import Namespace, _SubParsersAction

from ....encoder import new_encode, old_encode
from ....minimizer import minimize
from ....qparse import serialize
from ...constants import SHARPCQA_MAX_MINIMIZE_ATOMS
from .. import BaseSharpCQACLICommand
from ..inputs import read_query, read_schema


class QueryCommands(BaseSharpCQACLICommand):
    """Registers `encode` and `minimize`"""

    @staticmethod
    def register_subcommand(parser: _SubParsersAction) -> None:
        """Registers the query transformation subcommands.

        Args:
            parser (_SubParsersAction): The parser object to add subcommands to.
        """
        encode_parser = parser.add_parser("encode", help="Encode a query over the single relation N")
        encode_parser.add_argument("query", help="query file or query text")
        encode_parser.add_argument("--schema", "-s", help="schema file or text; defaults to the relations of the query")
        kind = encode_parser.add_mutually_exclusive_group()
        kind.add_argument("--new", dest="old", action="store_false", help="pad with fresh variables (default)")
        kind.add_argument("--old", dest="old", action="store_true", help="pad with the zero constant")
        encode_parser.set_defaults(func=lambda args: EncodeCommand(args), old=False)

        minimize_parser = parser.add_parser("minimize", help="Key-chase and minimize a query")
        minimize_parser.add_argument("query", help="query file or query text")
        minimize_parser.add_argument(
            "--max-atoms",
            type=int,
            default=SHARPCQA_MAX_MINIMIZE_ATOMS,
            help="largest query size accepted by the minimizer",
        )
        minimize_parser.set_defaults(func=lambda args: MinimizeCommand(args))


class EncodeCommand:
    """Prints the old or the corrected encoding of a query"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Encodes the query and prints it in canonical form"""
        schema = read_schema(self.args.schema)
        q = read_query(self.args.query, schema)
        encode = old_encode if self.args.old else new_encode
        print(serialize(encode(q, schema)))


class MinimizeCommand:
    """Prints the minimal query equivalent to a query on repairs"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Minimizes the query and prints it in canonical form"""
        print(serialize(minimize(read_query(self.args.query), self.args.max_atoms)))
