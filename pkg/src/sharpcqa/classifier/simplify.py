"""The grounding rule applied to unirelational encoded queries.

An atom whose whole key is constant is satisfied, in any repair, by the single fact of its block. Each
non-key variable of such an atom is therefore determined by the database and can be replaced by a constant
without changing the counting problem. The rule only grounds variables occurring at least twice; a
variable occurring once (such as a padding variable) constrains nothing and stays a variable.
"""
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import count
from typing import Optional

from ..model import Atom, Constant, Query, Substitution, Variable, is_ground
from ..sharpcqa_core.constants import RESERVED_SEPARATOR
from ..sharpcqa_core.exceptions import NotEncodedQueryError
from ..sharpcqa_core.logger import log

FRESH_CONSTANT_PREFIX = "c"


@dataclass(frozen=True)
class GroundingStep:
    """One application of the grounding rule.

    Attributes:
        atom (Atom): the atom with a constant key that triggered the step, before substitution.
        variable (Variable): the non-key variable that was grounded.
        constant (Constant): the fresh constant replacing it everywhere.
    """

    atom: Atom
    variable: Variable
    constant: Constant

    def __str__(self) -> str:
        return f"{self.atom}: {self.variable} := {self.constant}"


def check_encoded_shape(q: Query) -> None:
    """Checks that `q` is unirelational with a constant at the first key position of every atom.

    Raises:
        NotEncodedQueryError: otherwise.
    """
    if not q.is_unirelational:
        raise NotEncodedQueryError(f"{q} uses more than one relation")
    for atom in q.sorted_atoms:
        if not is_ground(atom.key[0]):
            raise NotEncodedQueryError(f"The first key position of {atom} is not a constant")


def fresh_constants(q: Query) -> Iterator[Constant]:
    """Constants c#1, c#2, ... skipping those already occurring in `q`"""
    used = q.constants
    for index in count(1):
        constant = Constant(f"{FRESH_CONSTANT_PREFIX}{RESERVED_SEPARATOR}{index}")
        if constant not in used:
            yield constant


def _eligible(q: Query) -> Optional[tuple[Atom, Variable]]:
    occurrences = q.occurrences
    for atom in q.sorted_atoms:
        if not all(is_ground(t) for t in atom.key):
            continue
        for term in atom.nonkey:
            if isinstance(term, Variable) and occurrences[term] >= 2:
                return atom, term
    return None


def simplify_with_steps(q: Query) -> tuple[Query, list[GroundingStep]]:
    """Applies the grounding rule until no atom with a constant key has a repeated non-key variable.

    The lexicographically least eligible atom is grounded first, and within it the leftmost eligible
    non-key position.

    Args:
        q (Query): a unirelational query with a constant at the first key position of every atom.

    Raises:
        NotEncodedQueryError: if `q` does not have that shape.

    Returns:
        tuple[Query, list[GroundingStep]]: the fixpoint and the steps that led to it.
    """
    check_encoded_shape(q)
    supply = fresh_constants(q)
    steps: list[GroundingStep] = []
    while (eligible := _eligible(q)) is not None:
        atom, variable = eligible
        step = GroundingStep(atom, variable, next(supply))
        log.debug(f"Grounding {step}")
        steps.append(step)
        q = q.substitute(Substitution({variable: step.constant}))
    return q, steps


def simplify(q: Query) -> Query:
    """The fixpoint of the grounding rule, see `simplify_with_steps`"""
    return simplify_with_steps(q)[0]
