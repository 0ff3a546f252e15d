import json

import pytest
from hypothesis import given, settings
from strategies import databases, queries, schemas

from sharpcqa.classifier import classify_skbcq
from sharpcqa.model import (
    Atom,
    Constant,
    CoupleConstant,
    Database,
    Fact,
    Query,
    RelationConstant,
    RelationSymbol,
    Schema,
    Variable,
)
from sharpcqa.qparse import (
    TokenType,
    parse_database,
    parse_document,
    parse_query,
    parse_schema,
    serialize,
    serialize_database,
    serialize_query,
    tokenize,
)
from sharpcqa.sharpcqa_core.exceptions import (
    ArityMismatchError,
    NonGroundFactError,
    QuerySyntaxError,
    SignatureMismatchError,
    UnknownRelationError,
)

R = RelationSymbol("R", 1, 1)
S = RelationSymbol("S", 1, 0)
x, y = Variable("x"), Variable("y")


def test_tokenize_tracks_positions() -> None:
    tokens = tokenize("R[x; y]\n% comment\nS[?a;]")
    assert [t.type for t in tokens][:7] == [
        TokenType.NAME,
        TokenType.LBRACKET,
        TokenType.NAME,
        TokenType.SEMICOLON,
        TokenType.NAME,
        TokenType.RBRACKET,
        TokenType.NEWLINE,
    ]
    escaped = next(t for t in tokens if t.type is TokenType.ESCAPED_VARIABLE)
    assert (escaped.text, escaped.line, escaped.column) == ("a", 3, 3)
    assert tokens[-1].type is TokenType.END


def test_parse_q0() -> None:
    q0 = parse_query("R[x; y], S[y;]")
    assert q0 == Query.of(Atom(R, (x,), (y,)), Atom(S, (y,)))
    assert q0.schema == Schema.of(R, S)


@pytest.mark.parametrize(
    "text",
    [
        "{R[x; y], S[y;]}",
        "R[x; y]\nS[y;]",
        "% the running example\nR[x; y],   S[y;]  % trailing comment\n",
        "R[x; y], S[y;], R[x; y]",
    ],
)
def test_equivalent_layouts(text: str) -> None:
    assert parse_query(text) == parse_query("R[x; y], S[y;]")


def test_term_kinds() -> None:
    q = parse_query("""N['R', a, ?b; "x", <c|y>, <c|c>]""")
    (atom,) = q.atoms
    assert atom.key == (RelationConstant("R"), Constant("a"), Variable("b"))
    assert atom.nonkey == (Constant("x"), CoupleConstant(Constant("c"), y), Constant("c"))


def test_declarations_fix_signatures() -> None:
    q = parse_query("rel T key 2 val 0\nrel U key 1 val 3\nT[x, y;]")
    assert q.schema.get("T") == RelationSymbol("T", 2, 0)
    assert q.schema.get("U") == RelationSymbol("U", 1, 3)
    assert parse_schema("rel R key 1 val 1\nrel S key 1 val 0") == Schema.of(R, S)


@pytest.mark.parametrize(
    "text, error, line, column",
    [
        ("R[x; y] @", QuerySyntaxError, 1, 9),
        ("R[x; y]\nR[x, y;]", SignatureMismatchError, 2, 1),
        ("R[x; y]\nR[x; y, z]", ArityMismatchError, 2, 1),
        ("R[x y]", QuerySyntaxError, 1, 5),
        ("R[; y]", SignatureMismatchError, 1, 1),
        ("{R[x; y]", QuerySyntaxError, 1, 9),
        ("rel R key 1 val 1\nrel R key 2 val 0", SignatureMismatchError, 2, 1),
        ("R[<x|a>; y]", QuerySyntaxError, 1, 3),
    ],
)
def test_parse_errors_carry_positions(text: str, error: type, line: int, column: int) -> None:
    with pytest.raises(error) as info:
        parse_query(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"{line}:{column}: ")


def test_schema_text_rejects_atoms() -> None:
    with pytest.raises(QuerySyntaxError):
        parse_schema("rel R key 1 val 1\nR[x; y]")


def test_parse_database() -> None:
    db = parse_database("R[a; 1]\nR[a; 2]\nS[1;]")
    assert len(db) == 3
    assert Fact(R, (Constant("a"),), (Constant("1"),)) in db
    with pytest.raises(NonGroundFactError) as info:
        parse_database("R[a; 1]\nS[y;]")
    assert info.value.line == 2


def test_parse_database_against_schema() -> None:
    schema = Schema.of(R)
    with pytest.raises(UnknownRelationError):
        parse_database("S[1;]", schema)
    db = parse_database("S[1;]", schema, allow_inference=True)
    assert db.schema == Schema.of(R, S)
    assert parse_database("rel S key 1 val 0\nS[1;]", schema).schema == Schema.of(R, S)


def test_parse_document_keeps_duplicates() -> None:
    document = parse_document("R[x; y]\nR[x; y]")
    assert len(document.atoms) == 2
    assert document.atoms[1].line == 2
    assert not document.declarations


@pytest.mark.parametrize(
    "text, expected",
    [
        ("S[y;], R[x; y]", "R[x; y], S[y;]"),
        ("R[?a; \"x\"]", 'R[?a; "x"]'),
        ("rel T key 1 val 0\nR[x; y]", "rel T key 1 val 0\nR[x; y]"),
    ],
)
def test_serialize_query(text: str, expected: str) -> None:
    assert serialize_query(parse_query(text)) == expected


def test_serialize_couple_fact() -> None:
    n = RelationSymbol("N", 2, 1)
    fact = Fact(n, (RelationConstant("R"), CoupleConstant(Constant("a"), x)), (CoupleConstant(Constant("b"), y),))
    assert serialize(Database.of(fact)) == "N['R',<a|x>; <b|y>]"


def test_escaped_constants_round_trip() -> None:
    db = Database.of(Fact(R, (Constant("a\nb"),), (Constant('say "hi"\\'),)))
    text = serialize_database(db)
    assert text == 'R["a\\nb"; "say \\"hi\\"\\\\"]'
    assert parse_database(text) == db


def test_serialize_database_is_sorted() -> None:
    db = parse_database("S[1;]\nR[b; 2]\nR[a; 1]")
    assert serialize_database(db) == "R[a; 1]\nR[b; 2]\nS[1;]"
    assert serialize(db.schema) == "rel R key 1 val 1\nrel S key 1 val 0"


def test_classification_json_key_order() -> None:
    report = json.loads(serialize(classify_skbcq(parse_query("R[x; y], S[y;]"))))
    assert list(report) == ["verdict", "trace", "query", "encoded_query", "witness"]
    assert report["verdict"] == "fp"
    assert report["witness"] is None
    assert all(set(entry) == {"step", "result"} for entry in report["trace"])


@settings(max_examples=80, deadline=None)
@given(queries())
def test_query_text_round_trip(q: Query) -> None:
    assert parse_query(serialize_query(q)) == q


@settings(max_examples=80, deadline=None)
@given(schemas().flatmap(databases))
def test_database_text_round_trip(db: Database) -> None:
    assert parse_database(serialize_database(db)) == db
