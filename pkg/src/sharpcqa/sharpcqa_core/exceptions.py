from typing import Optional


class SharpCQAError(Exception):
    """Base class of every error raised by sharpcqa."""

    exit_code = 1


class UsageError(SharpCQAError):
    """Exception raised for malformed input or command-line usage."""

    exit_code = 1


class ParseError(UsageError):
    """Exception raised when a query, schema or database text cannot be read.

    Attributes:
        line (int): 1-based line of the offending token.
        column (int): 1-based column of the offending token.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}" if line else message)


class QuerySyntaxError(ParseError):
    """Exception raised when the text does not follow the atom grammar."""


class ArityMismatchError(ParseError):
    """Exception raised when an atom disagrees with the arity of its relation."""


class SignatureMismatchError(ParseError):
    """Exception raised when an atom disagrees with the key/non-key split of its relation."""


class NonGroundFactError(ParseError):
    """Exception raised when a fact line contains a variable."""


class UnknownRelationError(ParseError):
    """Exception raised when a relation is not part of the schema in use."""


class PreconditionError(SharpCQAError):
    """Exception raised when an operation is called outside of its domain."""

    exit_code = 2


class NotSimpleKeyError(PreconditionError):
    """Exception raised when a relation with a composite key reaches the skBCQ classifier."""


class NotEncodedQueryError(PreconditionError):
    """Exception raised when a query is not unirelational with a constant first key position."""


class UnsatisfiableQueryError(PreconditionError):
    """Exception raised when a query that no consistent database satisfies is minimized."""


class AtomNotInQueryError(PreconditionError):
    """Exception raised when connectivity is asked for atoms outside of the query."""


class KeyCollisionError(PreconditionError):
    """Exception raised when two atoms of a query agree on relation and key."""


class MalformedEncodingError(PreconditionError):
    """Exception raised when an N-fact cannot belong to the image of an encoding."""


class ResourceLimitError(SharpCQAError):
    """Exception raised when an exhaustive search would exceed its configured bound."""

    exit_code = 2


class RepairSpaceTooLargeError(ResourceLimitError):
    """Exception raised when the number of repairs exceeds the repair cap."""

    def __init__(self, repair_count: int, cap: int) -> None:
        self.repair_count = repair_count
        self.cap = cap
        super().__init__(f"The database has {repair_count} repairs, which exceeds the cap of {cap}")


class MinimizationLimitError(ResourceLimitError):
    """Exception raised when a query is too large for exhaustive minimization."""

    def __init__(self, size: int, limit: int, hint: Optional[str] = None) -> None:
        self.size = size
        self.limit = limit
        message = f"Minimization is limited to {limit} atoms, but the query has {size}"
        super().__init__(f"{message}. {hint}" if hint else message)


class SchemaError(ValueError):
    """Exception raised when a model object violates its own signature constraints."""


class InvalidOptionsError(UsageError, ValueError):
    """Exception raised when an options value fails its type or value check."""
