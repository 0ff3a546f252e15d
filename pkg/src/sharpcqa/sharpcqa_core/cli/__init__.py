"""BaseCLICommand class for sharpcqa subcommands"""
from abc import ABC, abstractmethod
from argparse import _SubParsersAction


class BaseSharpCQACLICommand(ABC):
    """Abstract base class of the command families registered on the sharpcqa parser"""

    @staticmethod
    @abstractmethod
    def register_subcommand(parser: _SubParsersAction) -> None:
        """Registers the subcommands of this family.

        Each subcommand sets `func` to a factory building the command object that `main` runs.

        Args:
            parser (_SubParsersAction): The subparsers of the sharpcqa parser.

        Raises:
            NotImplementedError: If the method is not implemented in a subclass.
        """
        raise NotImplementedError()
