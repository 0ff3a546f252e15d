"""Terms of conjunctive queries and facts.

A term is either a `Variable` or a ground term. Ground terms come in three kinds:

* `Constant` - a symbolic literal such as `a`, `1` or the padding zero `0`;
* `RelationConstant` - a relation name used as a constant inside encoded atoms, written `'R'`;
* `CoupleConstant` - a pair `<a|x>` of a data constant and a term of a source query.

All terms are immutable and compared structurally. `str(term)` is the canonical text form read back
by `sharpcqa.qparse`, and it doubles as the sort key for every canonical ordering in the package.
"""
import re
from dataclasses import dataclass
from typing import Union

from ..sharpcqa_core.constants import RESERVED_SEPARATOR, VARIABLE_INITIALS
from ..sharpcqa_core.exceptions import SchemaError

_BARE_TOKEN = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_#]*")


def is_bare_token(text: str) -> bool:
    """Whether `text` can be written without quotes or escapes"""
    return _BARE_TOKEN.fullmatch(text) is not None


def reads_as_variable(text: str) -> bool:
    """Whether the bare token `text` is read back as a variable"""
    return text[:1] in VARIABLE_INITIALS


@dataclass(frozen=True)
class Variable:
    """A query variable"""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaError("Variable names must be nonempty")

    def __str__(self) -> str:
        if is_bare_token(self.name) and reads_as_variable(self.name):
            return self.name
        return f"?{self.name}"


@dataclass(frozen=True)
class Constant:
    """A symbolic literal constant"""

    value: str

    def __str__(self) -> str:
        if is_bare_token(self.value) and not reads_as_variable(self.value):
            return self.value
        escaped = self.value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{escaped}"'


@dataclass(frozen=True)
class RelationConstant:
    """A relation name used as a constant, as in the first key position of an encoded atom"""

    name: str

    def __str__(self) -> str:
        return f"'{self.name}'"


@dataclass(frozen=True)
class CoupleConstant:
    """The constant <left|right> pairing a data constant with a term of a source query.

    Two couples are equal iff both coordinates are equal. A couple whose coordinates are the same constant
    is not a couple but that constant, so instances must be built through `couple`.
    """

    left: "GroundTerm"
    right: "Term"

    def __post_init__(self) -> None:
        if self.left == self.right:
            raise SchemaError(f"<{self.left}|{self.right}> must be collapsed to {self.left}")

    def __str__(self) -> str:
        return f"<{self.left}|{self.right}>"


GroundTerm = Union[Constant, RelationConstant, CoupleConstant]
Term = Union[Variable, Constant, RelationConstant, CoupleConstant]

PADDING_ZERO = Constant("0")
RESERVED_PADDING_ZERO = Constant(f"0{RESERVED_SEPARATOR}")


def couple(left: GroundTerm, right: Term) -> GroundTerm:
    """Builds the canonical couple <left|right>, collapsing <c|c> to c.

    Args:
        left (GroundTerm): the data coordinate.
        right (Term): the query coordinate.

    Returns:
        GroundTerm: `left` if both coordinates are the same constant, the couple otherwise.
    """
    if left == right:
        return left
    return CoupleConstant(left, right)


def is_ground(term: Term) -> bool:
    """Whether `term` is a constant of any kind"""
    return not isinstance(term, Variable)
