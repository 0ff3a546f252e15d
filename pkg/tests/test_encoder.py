import pytest
from hypothesis import given, settings
from strategies import databases, queries, schemas

from sharpcqa.encoder import (
    EncodingContext,
    NoPreimage,
    decode_atom,
    encode_with_origin,
    invert_old_encode,
    is_cxbcq,
    new_encode,
    old_encode,
    selfjoinfree_rewrite,
)
from sharpcqa.enums import EncodingKind
from sharpcqa.model import Atom, Constant, Database, Query, RelationSymbol, Schema, Variable
from sharpcqa.qparse import parse_database, parse_query, parse_schema
from sharpcqa.reducer import pad_database
from sharpcqa.sharpcqa_core.exceptions import MalformedEncodingError, UnknownRelationError

Q0 = "R[x; y], S[y;]"


def test_new_encode_q0() -> None:
    encoded = new_encode(parse_query(Q0))
    assert str(encoded) == "N['R',x; y], N['S',y; z#1]"
    assert encoded.schema == Schema.of(RelationSymbol("N", 2, 1))


def test_old_encode_q0() -> None:
    assert str(old_encode(parse_query(Q0))) == "N['R',x; y], N['S',y; 0]"


def test_encoding_pads_keys_with_zero() -> None:
    q = parse_query("rel T key 2 val 0\nR[x; y]")
    assert str(new_encode(q)) == "N['R',x,0; y]"
    assert str(new_encode(parse_query("R[x; y], T[x, y;]"))) == "N['R',x,0; y], N['T',x,y; z#1]"


def test_padding_variables_follow_canonical_order() -> None:
    q = parse_query("rel R key 1 val 2\nT[y;], S[x;]")
    assert str(new_encode(q)) == "N['S',x; z#1,z#2], N['T',y; z#3,z#4]"


def test_padding_variables_skip_query_variables() -> None:
    q = parse_query("R[x; z#1], S[z#1;]")
    assert str(new_encode(q)) == "N['R',x; z#1], N['S',z#1; z#2]"
    assert str(old_encode(q)) == "N['R',x; z#1], N['S',z#1; 0]"


def test_encoding_uses_the_given_schema() -> None:
    schema = parse_schema("rel R key 1 val 1\nrel S key 1 val 0\nrel U key 1 val 2")
    assert str(new_encode(parse_query(Q0), schema)) == "N['R',x; y,z#1], N['S',y; z#2,z#3]"
    with pytest.raises(UnknownRelationError):
        new_encode(parse_query("T[x;]"), schema)


def test_encoding_relation_avoids_schema_names() -> None:
    q = parse_query("N[x; y], S[y;]")
    assert str(new_encode(q)) == "N#1['N',x; y], N#1['S',y; z#1]"


def test_reserved_padding_zero() -> None:
    ctx = EncodingContext.from_schema(parse_query(Q0).schema, reserve_padding_zero=True)
    assert ctx.padding_zero == Constant("0#")
    assert str(ctx.pad(Atom(RelationSymbol("S", 1, 0), (Variable("y"),)), ctx.zeros())) == "N['S',y; 0#]"


def test_encode_with_origin() -> None:
    q = parse_query(Q0)
    encoding = encode_with_origin(q, kind=EncodingKind.old)
    assert set(encoding.origin.values()) == set(q.atoms)
    assert set(encoding.origin) == set(encoding.query.atoms)


def test_decode_atom() -> None:
    q = parse_query(Q0)
    ctx = EncodingContext.from_schema(q.schema)
    for encoded, atom in encode_with_origin(q).origin.items():
        assert decode_atom(encoded, ctx) == atom
    with pytest.raises(MalformedEncodingError):
        decode_atom(next(iter(q.atoms)), ctx)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("N['R',x; y], N['S',y; z#1]", True),
        ("N['R',x; y], N[a,y; z]", True),
        ("N[x,y; z]", False),
        ("N['R',x,0; y]", False),
        (Q0, False),
    ],
)
def test_is_cxbcq(text: str, expected: bool) -> None:
    assert is_cxbcq(parse_query(text)) is expected


def test_invert_old_encode() -> None:
    schema = parse_query(Q0).schema
    db = parse_database("N['R',a; 1]\nN['S',1; 0]")
    assert invert_old_encode(db, schema) == parse_database("R[a; 1]\nS[1;]", schema)


def test_invert_old_encode_without_preimage() -> None:
    schema = parse_query(Q0).schema
    outcome = invert_old_encode(parse_database("N['R',a; 1]\nN['S',c; 1]"), schema)
    assert isinstance(outcome, NoPreimage)
    assert str(outcome) == "NoPreimage: N['S',c; 1]"
    assert "1" in outcome.reason


@pytest.mark.parametrize("text", ["N['T',a; 1]", "N[a,b; 1]", "R[a; 1]"])
def test_invert_old_encode_rejects_malformed_facts(text: str) -> None:
    with pytest.raises(MalformedEncodingError):
        invert_old_encode(parse_database(text), parse_query(Q0).schema)


def test_selfjoinfree_rewrite() -> None:
    q = parse_query("R[x; y], R[y; z], S[z;]")
    rewrite = selfjoinfree_rewrite(q)
    assert str(rewrite.query) == "R#1[x; y], R#2[y; z], S#1[z;]"
    assert rewrite.query.is_self_join_free
    assert rewrite.source == q
    r2 = rewrite.atom_for(RelationSymbol("R#2", 1, 1))
    assert str(rewrite.origin[r2]) == "R[y; z]"
    with pytest.raises(UnknownRelationError):
        rewrite.atom_for(RelationSymbol("R#3", 1, 1))


@settings(max_examples=80, deadline=None)
@given(queries())
def test_decode_inverts_encode(q: Query) -> None:
    ctx = EncodingContext.from_schema(q.schema)
    encoding = encode_with_origin(q)
    assert len(encoding.query) == len(q)
    for encoded, atom in encoding.origin.items():
        assert decode_atom(encoded, ctx) == atom


@settings(max_examples=80, deadline=None)
@given(queries())
def test_new_padding_variables_occur_once(q: Query) -> None:
    encoded = new_encode(q)
    occurrences = encoded.occurrences
    padding = [v for v in encoded.variables if v.name.startswith("z#")]
    assert all(occurrences[v] == 1 for v in padding)
    assert is_cxbcq(encoded) == (q.schema.max_key_arity == 1)


@settings(max_examples=80, deadline=None)
@given(schemas().flatmap(databases))
def test_invert_recovers_padded_database(db: Database) -> None:
    ctx = EncodingContext.from_schema(db.schema)
    assert invert_old_encode(pad_database(db, ctx), db.schema) == db
