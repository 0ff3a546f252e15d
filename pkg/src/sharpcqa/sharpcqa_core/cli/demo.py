"""The end-to-end demonstration of why zero padding breaks the encoding reduction.

For q0 = {R[x; y], S[y;]} the old encoding pads the S-atom with the constant 0. The database db0 over N
contains the fact N['S',c; 1], which is not the image of any fact over the schema, so #CQA of the old encoding
is not a many-one target of #CQA(q0). The old encoding is #P-hard while q0 itself is in FP; the corrected
encoding pads with a fresh variable and agrees with q0.
"""
from collections.abc import Iterable
from typing import Optional

from ...classifier import classify_encoded, classify_skbcq
from ...encoder import NoPreimage, invert_old_encode, new_encode, old_encode
from ...model import Atom, Database, Query, complex_part, sorted_atoms
from ...qparse import parse_database, parse_query, parse_schema, serialize_database
from ...repairs import count_satisfying, repair_count
from ..logger import log

FLAW_SCHEMA = """
rel R key 1 val 1
rel S key 1 val 0
"""

FLAW_QUERY = "R[x; y], S[y;]"

FLAW_DATABASE = """
N['R',b; c]
N['S',c; 0]
N['S',c; 1]
"""


def _atoms(atoms: Iterable[Atom]) -> str:
    return ", ".join(str(atom) for atom in sorted_atoms(atoms)) or "none"


def _witness(witness: Optional[tuple[Atom, Atom]]) -> str:
    return "none" if witness is None else f"{witness[0]} ~ {witness[1]}"


def _count_line(name: str, q: Query, db: Database) -> str:
    return f"repairs of db0 satisfying the {name} encoding: {count_satisfying(db, q)} of {repair_count(db)}"


def flaw_report() -> str:
    """The demonstration as text, identical on every run"""
    schema = parse_schema(FLAW_SCHEMA)
    q0 = parse_query(FLAW_QUERY, schema)
    old, new = old_encode(q0, schema), new_encode(q0, schema)
    db0 = parse_database(FLAW_DATABASE)

    lines = [
        f"query q0: {q0}",
        f"schema: {', '.join(str(r) for r in schema)}",
        f"old encoding: {old}",
        f"new encoding: {new}",
        "db0:",
        *(f"  {line}" for line in serialize_database(db0).splitlines()),
    ]
    preimage = invert_old_encode(db0, schema)
    if isinstance(preimage, NoPreimage):
        lines += [str(preimage), f"  {preimage.reason}"]
    else:
        lines.append(f"preimage: {preimage}")

    # q0 and both encodings trigger shape advisories
    with log.ignore_warnings():
        old_verdict = classify_encoded(old)
        query_verdict = classify_skbcq(q0, schema)
        new_verdict = classify_encoded(new)
    lines += [
        _count_line("old", old, db0),
        _count_line("new", new, db0),
        f"complex part of the old encoding: {_atoms(complex_part(old))}",
        f"complex part of the new encoding: {_atoms(complex_part(new))}",
        f"hardness witness in the old encoding: {_witness(old_verdict.witness)}",
        f"hardness witness in the new encoding: {_witness(new_verdict.witness)}",
        f"old encoding: {old_verdict.verdict.complexity}; query: {query_verdict.verdict.complexity}",
    ]
    return "\n".join(lines)
