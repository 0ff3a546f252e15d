"""The decision procedure for #CQA of Boolean conjunctive queries with simple keys.

The pipeline chases the query with its key constraints, minimizes it, encodes it as a unirelational query
with the corrected encoding and decides the encoded query with the grounding rule and the hardness witness
search. Every intermediate object is recorded in the trace of the resulting `Classification`.
"""
from dataclasses import dataclass, field
from typing import Any, Optional

from ..encoder import new_encode
from ..enums import Verdict
from ..model import Atom, Query, Schema
from ..minimizer import Unsatisfiable, key_chase, minimize
from ..qparse.report import ClassificationReport, TraceEntry
from ..sharpcqa_core.constants import SHARPCQA_MAX_MINIMIZE_ATOMS
from ..sharpcqa_core.exceptions import NotSimpleKeyError, SignatureMismatchError
from ..sharpcqa_core.logger import log
from .easy import find_hardness_witness, shape_advisories
from .simplify import GroundingStep, simplify_with_steps


@dataclass(frozen=True)
class TraceStep:
    """A named step of a classification and the canonical text of its output"""

    name: str
    detail: str


@dataclass(frozen=True)
class Classification:
    """The verdict on #CQA(q) and the objects computed on the way.

    Attributes:
        verdict (Verdict): FP, SharpPHard or TriviallyZero.
        query (Query): the classified query.
        trace (tuple[TraceStep, ...]): the pipeline steps in execution order.
        chased (Optional[Query]): the key-chased query, `None` if the chase failed or was skipped.
        minimized (Optional[Query]): the minimal query.
        encoded (Optional[Query]): the encoded query that was decided.
        simplified (Optional[Query]): the fixpoint of the grounding rule on `encoded`.
        grounding (tuple[GroundingStep, ...]): the grounding steps from `encoded` to `simplified`.
        witness (Optional[tuple[Atom, Atom]]): the hardness witness, present iff the verdict is SharpPHard.
        advisories (tuple[Atom, ...]): atoms of `simplified` with both a variable key and a variable non-key part.
        unsatisfiable (Optional[Unsatisfiable]): the failed chase behind a TriviallyZero verdict.
    """

    verdict: Verdict
    query: Query
    trace: tuple[TraceStep, ...] = ()
    chased: Optional[Query] = None
    minimized: Optional[Query] = None
    encoded: Optional[Query] = None
    simplified: Optional[Query] = None
    grounding: tuple[GroundingStep, ...] = ()
    witness: Optional[tuple[Atom, Atom]] = None
    advisories: tuple[Atom, ...] = field(default=())
    unsatisfiable: Optional[Unsatisfiable] = None

    @property
    def is_hard(self) -> bool:
        """Whether the verdict is SharpPHard"""
        return self.verdict is Verdict.SHARP_P_HARD

    def report(self) -> ClassificationReport:
        """The JSON model of this classification"""
        return ClassificationReport(
            verdict=self.verdict.value,
            trace=[TraceEntry(step=step.name, result=step.detail) for step in self.trace],
            query=str(self.query),
            encoded_query=None if self.encoded is None else str(self.encoded),
            witness=None if self.witness is None else [str(atom) for atom in self.witness],
        )


def _decide(encoded: Query, trace: list[TraceStep]) -> dict[str, Any]:
    """Simplifies an encoded query and searches for a hardness witness, extending `trace`"""
    simplified, steps = simplify_with_steps(encoded)
    trace.extend(TraceStep("ground", str(step)) for step in steps)
    trace.append(TraceStep("simplify", str(simplified)))
    advisories = shape_advisories(simplified)
    trace.extend(TraceStep("advisory", f"{atom} has a variable key and a non-ground non-key part") for atom in advisories)
    witness = find_hardness_witness(simplified)
    trace.append(TraceStep("witness", "none" if witness is None else f"{witness[0]} ~ {witness[1]}"))
    verdict = Verdict.FP if witness is None else Verdict.SHARP_P_HARD
    trace.append(TraceStep("verdict", str(verdict)))
    return {
        "verdict": verdict,
        "encoded": encoded,
        "simplified": simplified,
        "grounding": tuple(steps),
        "witness": witness,
        "advisories": tuple(advisories),
    }


def classify_encoded(q: Query) -> Classification:
    """Decides #CQA for a unirelational query with a constant at the first key position of every atom.

    Raises:
        NotEncodedQueryError: if `q` does not have that shape.
    """
    trace = [TraceStep("input", str(q))]
    decision = _decide(q, trace)
    return Classification(query=q, trace=tuple(trace), **decision)


def check_simple_key(q: Query, schema: Optional[Schema] = None) -> Schema:
    """Checks that every relation of `q` and of `schema` has a single key position.

    Args:
        q (Query): a query.
        schema (Optional[Schema], optional): the schema S. Defaults to the schema of `q`.

    Raises:
        NotSimpleKeyError: if some relation has a composite key.
        SignatureMismatchError: if `schema` declares a relation of `q` with another signature.

    Returns:
        Schema: the schema the query is encoded over.
    """
    schema = q.schema if schema is None else schema
    for relation in q.schema.relations:
        declared = schema.get(relation.name)
        if declared is not None and declared != relation:
            raise SignatureMismatchError(f"{relation} conflicts with the schema declaration {declared}")
    for relation in sorted(q.schema.relations | schema.relations, key=lambda r: r.name):
        if not relation.is_simple_key:
            raise NotSimpleKeyError(f"{relation.name} has {relation.key_arity} key positions, but skBCQ needs 1")
    return schema


def classify_skbcq(q: Query, schema: Optional[Schema] = None, max_atoms: int = SHARPCQA_MAX_MINIMIZE_ATOMS) -> Classification:
    """Classifies #CQA(q) for a Boolean conjunctive query with simple keys as FP, #P-hard or trivially zero.

    Args:
        q (Query): a query whose relations all have a single key position.
        schema (Optional[Schema], optional): the schema S used for the encoding. Defaults to the schema of `q`.
        max_atoms (int, optional): the largest chased query that is minimized. Defaults to
            `SHARPCQA_MAX_MINIMIZE_ATOMS`.

    Raises:
        NotSimpleKeyError: if a relation of `q` or of `schema` has a composite key.
        MinimizationLimitError: if the chased query has more than `max_atoms` atoms.

    Returns:
        Classification: the verdict with the chased, minimized, encoded and simplified queries.
    """
    schema = check_simple_key(q, schema)
    trace = [TraceStep("input", str(q))]
    chased = key_chase(q)
    if isinstance(chased, Unsatisfiable):
        log.debug(f"{q} is trivially zero: {chased}")
        trace.append(TraceStep("key-chase", str(chased)))
        trace.append(TraceStep("verdict", str(Verdict.TRIVIALLY_ZERO)))
        return Classification(Verdict.TRIVIALLY_ZERO, q, tuple(trace), unsatisfiable=chased)
    trace.append(TraceStep("key-chase", str(chased)))

    minimized = minimize(chased, max_atoms)
    trace.append(TraceStep("minimize", str(minimized)))
    encoded = new_encode(minimized, schema)
    trace.append(TraceStep("encode", str(encoded)))
    decision = _decide(encoded, trace)
    return Classification(query=q, trace=tuple(trace), chased=chased, minimized=minimized, **decision)
