"""Handles the classification commands of the sharpcqa CLI"""
# pylint: disable=unnecessary-lambda, too-few-public-methods
from argparse import Namespace, _SubParsersAction

from tabulate import tabulate

from ....classifier import classify_skbcq, demonstrate_se3
from ....qparse import serialize, tabulate_trace
from ...constants import SHARPCQA_MAX_MINIMIZE_ATOMS
from .. import BaseSharpCQACLICommand
from ..inputs import read_query, read_schema


class ClassifyCommands(BaseSharpCQACLICommand):
    """Registers `classify` and `se3`"""

    @staticmethod
    def register_subcommand(parser: _SubParsersAction) -> None:
        """Registers the classification subcommands.

        Args:
            parser (_SubParsersAction): The parser object to add subcommands to.
        """
        classify_parser = parser.add_parser("classify", help="Decide whether #CQA(q) is in FP or #P-hard")
        classify_parser.add_argument("query", help="query file or query text")
        classify_parser.add_argument("--schema", "-s", help="schema file or text; defaults to the relations of the query")
        classify_parser.add_argument("--json", action="store_true", help="print the classification as JSON")
        classify_parser.add_argument(
            "--max-atoms",
            type=int,
            default=SHARPCQA_MAX_MINIMIZE_ATOMS,
            help="largest query size accepted by the minimizer",
        )
        classify_parser.set_defaults(func=lambda args: ClassifyCommand(args))

        se3_parser = parser.add_parser(
            "se3", help="Show the grounding steps on the encoding as steps on the self-join-free rewrite"
        )
        se3_parser.add_argument("query", help="query file or query text")
        se3_parser.add_argument("--schema", "-s", help="schema file or text; defaults to the relations of the query")
        se3_parser.set_defaults(func=lambda args: Se3Command(args))


class ClassifyCommand:
    """Prints the verdict on #CQA(q) and the classification trace"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Classifies the query and prints the verdict, then the trace table or the JSON report"""
        schema = read_schema(self.args.schema)
        q = read_query(self.args.query, schema)
        classification = classify_skbcq(q, schema, self.args.max_atoms)
        if self.args.json:
            print(serialize(classification))
            return
        print(classification.verdict)
        print(tabulate_trace(classification))


class Se3Command:
    """Prints the trace of `demonstrate_se3`"""

    def __init__(self, args: Namespace) -> None:
        self.args = args

    def run(self) -> None:
        """Prints q', the correspondence table and the witness pair"""
        schema = read_schema(self.args.schema)
        trace = demonstrate_se3(read_query(self.args.query, schema), schema)
        print(f"{trace.verdict} ({trace.note})")
        if trace.minimized is None:
            return
        print(f"minimized: {trace.minimized}")
        print(f"rewritten: {trace.rewritten}")
        print(f"encoded: {trace.encoded}")
        rows = [[step.encoded_atom, f"{step.variable} := {step.constant}", step.rewritten_atom] for step in trace.steps]
        print(tabulate(rows, headers=["encoded atom", "grounding", "rewritten atom"], tablefmt="simple"))
        padding = ", ".join(sorted(str(v) for v in trace.grounded_padding)) or "none"
        print(f"grounded padding variables: {padding}")
        if trace.witness is not None:
            print(f"witness: {trace.witness[0]} ~ {trace.witness[1]}")
