import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import databases, facts, query_and_database, schemas

from sharpcqa.enums import Connectivity
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
    Substitution,
    Variable,
    adjacent,
    complex_part,
    connected,
    couple,
    evaluate,
    find_valuation,
    intersection_graph,
    key_equal,
)
from sharpcqa.qparse import parse_database, parse_query
from sharpcqa.sharpcqa_core.exceptions import AtomNotInQueryError, SchemaError

R = RelationSymbol("R", 1, 1)
S = RelationSymbol("S", 1, 0)
N = RelationSymbol("N", 2, 1)
a, b, c = Constant("a"), Constant("b"), Constant("c")
x, y, z = Variable("x"), Variable("y"), Variable("z")


def atoms_of(text: str) -> frozenset:
    return parse_query(text).atoms


def test_couple_collapses_equal_coordinates() -> None:
    assert couple(c, c) == c
    assert couple(a, x) == CoupleConstant(a, x)
    assert couple(a, x) != couple(a, y)
    assert couple(a, x) != couple(b, x)
    with pytest.raises(SchemaError):
        CoupleConstant(c, c)


@pytest.mark.parametrize(
    "term, text",
    [
        (Variable("x"), "x"),
        (Variable("z#1"), "z#1"),
        (Variable("a"), "?a"),
        (Constant("a"), "a"),
        (Constant("0"), "0"),
        (Constant("c#1"), "c#1"),
        (Constant("x"), '"x"'),
        (Constant('say "hi"'), '"say \\"hi\\""'),
        (RelationConstant("R"), "'R'"),
        (CoupleConstant(Constant("a"), Variable("x")), "<a|x>"),
    ],
)
def test_term_text(term: object, text: str) -> None:
    assert str(term) == text


def test_relation_symbol_signature() -> None:
    assert R.is_simple_key
    assert not N.is_simple_key
    assert N.arity == 3
    with pytest.raises(SchemaError):
        RelationSymbol("T", 0, 1)


def test_atom_checks_signature() -> None:
    assert str(Atom(R, (x,), (y,))) == "R[x; y]"
    assert str(Atom(S, (y,))) == "S[y;]"
    with pytest.raises(SchemaError):
        Atom(R, (x, y), ())
    with pytest.raises(SchemaError):
        Fact(R, (a,), (x,))


@pytest.mark.parametrize(
    "first, second, expected",
    [
        (Fact(R, (a,), (Constant("1"),)), Fact(R, (a,), (Constant("2"),)), True),
        (Fact(R, (a,), (Constant("1"),)), Fact(R, (b,), (Constant("1"),)), False),
        (
            Fact(N, (RelationConstant("S"), c), (Constant("0"),)),
            Fact(N, (RelationConstant("S"), c), (Constant("1"),)),
            True,
        ),
    ],
)
def test_key_equal(first: Fact, second: Fact, expected: bool) -> None:
    assert key_equal(first, second) is expected
    assert key_equal(second, first) is expected


@pytest.mark.parametrize(
    "facts_text, expected",
    [
        ("R[a; 1]\nS[1;]", True),
        ("R[a; 1]\nS[2;]", False),
        ("", False),
    ],
)
def test_evaluate_q0(facts_text: str, expected: bool) -> None:
    q0 = parse_query("R[x; y], S[y;]")
    assert evaluate(q0, parse_database(facts_text, q0.schema)) is expected


def test_find_valuation_maps_query_into_database() -> None:
    q0 = parse_query("R[x; y], S[y;]")
    db = parse_database("R[a; 1]\nR[b; 2]\nS[1;]", q0.schema)
    theta = find_valuation(q0, db)
    assert theta == Substitution({x: a, y: Constant("1")})
    assert {theta.apply_atom(atom) for atom in q0.atoms} <= {Atom(f.relation, f.key, f.nonkey) for f in db.facts}


def test_query_merges_duplicates_and_checks_schema() -> None:
    q = Query.of(Atom(R, (x,), (y,)), Atom(R, (x,), (y,)))
    assert len(q) == 1
    with pytest.raises(SchemaError):
        Query(frozenset({Atom(R, (x,), (y,))}), Schema.of(S))


def test_query_predicates() -> None:
    assert parse_query("R[x; y], S[y;]").is_self_join_free
    assert not parse_query("R[x; y], R[y; z]").is_self_join_free
    assert parse_query("R[x; y], R[y; z]").is_unirelational
    assert parse_query("R[x; y], S[y;]").variables == {x, y}


@pytest.mark.parametrize(
    "text, expected",
    [
        ("N['R',x; y], N['S',y; 0]", "N['R',x; y], N['S',y; 0]"),
        ("N['R',x; y], N['S',y; z]", "N['R',x; y]"),
        ("R[x; w]", ""),
    ],
)
def test_complex_part(text: str, expected: str) -> None:
    q = parse_query(text)
    assert complex_part(q) == (atoms_of(expected) if expected else frozenset())


def test_intersection_graph() -> None:
    assert intersection_graph(parse_query("R[x; y], S[y;]")).number_of_edges() == 1
    assert intersection_graph(parse_query("R[x; y], S[z;]")).number_of_edges() == 0
    triangle = intersection_graph(parse_query("R[x; y], R[y; z], S[z; x]"))
    assert triangle.number_of_nodes() == 3
    assert triangle.number_of_edges() == 3


def test_connected_is_path_reachability() -> None:
    q = parse_query("R[x; y], S[y; z], T[z;]")
    r_atom, t_atom = Atom(q.schema.get("R"), (x,), (y,)), Atom(q.schema.get("T"), (z,))
    assert connected(q, r_atom, t_atom)
    assert not connected(q, r_atom, t_atom, Connectivity.ADJACENT)
    assert not adjacent(q, r_atom, t_atom)
    assert connected(q, r_atom, r_atom)


def test_disconnected_atoms() -> None:
    q = parse_query("R[x; y], S[z;]")
    first, second = q.sorted_atoms
    assert not connected(q, first, second)


def test_connected_rejects_foreign_atoms() -> None:
    q = parse_query("R[x; y], S[y;]")
    with pytest.raises(AtomNotInQueryError):
        connected(q, Atom(R, (x,), (y,)), Atom(R, (y,), (x,)))


def test_substitution_drops_identity_entries() -> None:
    theta = Substitution({x: x, y: a})
    assert len(theta) == 1
    assert theta == Substitution({y: a})
    assert theta.apply_atom(Atom(R, (x,), (y,))) == Atom(R, (x,), (a,))


def test_substitution_compose_and_inverse() -> None:
    swap = Substitution({x: y, y: x})
    assert swap.is_permutation
    assert swap.compose(swap.inverse()) == Substitution.identity()
    ground = Substitution({x: a})
    assert ground.compose(swap) == Substitution({x: y, y: a})
    with pytest.raises(ValueError):
        ground.inverse()


def test_database_consistency() -> None:
    assert parse_database("R[a; 1]\nR[b; 1]").is_consistent
    assert not parse_database("R[a; 1]\nR[a; 2]").is_consistent
    assert Database.of().is_consistent


@settings(max_examples=60, deadline=None)
@given(query_and_database(), st.data())
def test_evaluate_is_monotone(instance: tuple[Query, Database], data: st.DataObject) -> None:
    q, db = instance
    extra = data.draw(databases(db.schema))
    if evaluate(q, db):
        assert evaluate(q, db.with_facts(db.facts | extra.facts))


@settings(max_examples=60, deadline=None)
@given(schemas(), st.data())
def test_key_equal_is_an_equivalence(schema: Schema, data: st.DataObject) -> None:
    first, second, third = (data.draw(facts(schema)) for _ in range(3))
    assert key_equal(first, first)
    assert key_equal(first, second) == key_equal(second, first)
    if key_equal(first, second) and key_equal(second, third):
        assert key_equal(first, third)


@settings(max_examples=60, deadline=None)
@given(query_and_database())
def test_intersection_graph_is_loop_free(instance: tuple[Query, Database]) -> None:
    q, _ = instance
    graph = intersection_graph(q)
    assert set(graph.nodes) == set(q.atoms)
    assert all(u != v for u, v in graph.edges)
    assert complex_part(q) <= q.atoms
