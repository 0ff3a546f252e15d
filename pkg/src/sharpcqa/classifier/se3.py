"""The correspondence between grounding steps on the encoding of a minimal query and on its self-join-free rewrite.

Every atom of the encoding of q_m comes from exactly one atom of q_m, which is copied to exactly one atom of
the self-join-free rewrite q'. Following each grounding step back along these two maps shows the atom of q'
on which the same variable would be grounded, and maps a hardness witness of the encoding to a pair of atoms
of q'.
"""
from dataclasses import dataclass
from typing import Optional

from ..encoder import encode_with_origin, selfjoinfree_rewrite
from ..enums import Verdict
from ..model import Atom, Constant, Query, Schema, Substitution, Variable
from ..minimizer import Unsatisfiable, key_chase, minimize
from ..sharpcqa_core.constants import SHARPCQA_MAX_MINIMIZE_ATOMS
from .classification import check_simple_key
from .easy import find_hardness_witness
from .simplify import simplify_with_steps


@dataclass(frozen=True)
class Se3Step:
    """A grounding step on the encoding together with the atom of q' it corresponds to.

    Attributes:
        encoded_atom (Atom): the encoded atom that triggered the step.
        variable (Variable): the grounded variable.
        constant (Constant): the constant replacing it.
        rewritten_atom (Atom): the atom of q' on which the same variable is grounded.
    """

    encoded_atom: Atom
    variable: Variable
    constant: Constant
    rewritten_atom: Atom

    def __str__(self) -> str:
        return f"{self.rewritten_atom}: {self.variable} := {self.constant}"


@dataclass(frozen=True)
class Se3Trace:
    """The parallel trace of `demonstrate_se3`.

    Attributes:
        query (Query): the input query.
        verdict (Verdict): the verdict on the input query.
        minimized (Optional[Query]): q_m, `None` if the key chase failed.
        rewritten (Optional[Query]): the self-join-free rewrite q' of q_m.
        encoded (Optional[Query]): the corrected encoding of q_m.
        padding_variables (frozenset[Variable]): the variables the encoding introduced.
        steps (tuple[Se3Step, ...]): the grounding steps in execution order.
        witness (Optional[tuple[Atom, Atom]]): the hardness witness mapped to atoms of q'.
    """

    query: Query
    verdict: Verdict
    minimized: Optional[Query] = None
    rewritten: Optional[Query] = None
    encoded: Optional[Query] = None
    padding_variables: frozenset[Variable] = frozenset()
    steps: tuple[Se3Step, ...] = ()
    witness: Optional[tuple[Atom, Atom]] = None

    @property
    def grounded_padding(self) -> list[Variable]:
        """Padding variables that were grounded by some step, which is always empty"""
        return [step.variable for step in self.steps if step.variable in self.padding_variables]

    @property
    def note(self) -> str:
        """A one-word summary of the verdict"""
        return {Verdict.FP: "easy", Verdict.SHARP_P_HARD: "hard"}.get(self.verdict, "unsatisfiable")


def demonstrate_se3(
    q: Query, schema: Optional[Schema] = None, max_atoms: int = SHARPCQA_MAX_MINIMIZE_ATOMS
) -> Se3Trace:
    """Replays the grounding steps on the encoding of the minimized query as steps on its self-join-free rewrite.

    Args:
        q (Query): a query whose relations all have a single key position.
        schema (Optional[Schema], optional): the schema S used for the encoding. Defaults to the schema of `q`.
        max_atoms (int, optional): the largest chased query that is minimized.
            Defaults to `SHARPCQA_MAX_MINIMIZE_ATOMS`.

    Raises:
        NotSimpleKeyError: if a relation of `q` or of `schema` has a composite key.
        MinimizationLimitError: if the chased query has more than `max_atoms` atoms.

    Returns:
        Se3Trace: the steps on q' and the witness pair of q', if any.
    """
    schema = check_simple_key(q, schema)
    chased = key_chase(q)
    if isinstance(chased, Unsatisfiable):
        return Se3Trace(q, Verdict.TRIVIALLY_ZERO)

    minimized = minimize(chased, max_atoms)
    rewrite = selfjoinfree_rewrite(minimized)
    copy_of = {source: copy for copy, source in rewrite.origin.items()}
    encoding = encode_with_origin(minimized, schema)
    simplified, grounding = simplify_with_steps(encoding.query)

    origin = dict(encoding.origin)
    steps: list[Se3Step] = []
    for step in grounding:
        steps.append(Se3Step(step.atom, step.variable, step.constant, copy_of[origin[step.atom]]))
        theta = Substitution({step.variable: step.constant})
        origin = {theta.apply_atom(atom): source for atom, source in origin.items()}

    witness = find_hardness_witness(simplified)
    return Se3Trace(
        query=q,
        verdict=Verdict.FP if witness is None else Verdict.SHARP_P_HARD,
        minimized=minimized,
        rewritten=rewrite.query,
        encoded=encoding.query,
        padding_variables=encoding.query.variables - minimized.variables,
        steps=tuple(steps),
        witness=None if witness is None else (copy_of[origin[witness[0]]], copy_of[origin[witness[1]]]),
    )
