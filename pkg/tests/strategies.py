"""Hypothesis strategies for small schemas, queries and databases"""
from hypothesis import strategies as st

from sharpcqa.model import Atom, Constant, Database, Fact, Query, RelationSymbol, Schema, Variable

VARIABLES = [Variable(name) for name in ("x", "y", "z", "u")]
CONSTANTS = [Constant(name) for name in ("0", "1", "a", "b")]


@st.composite
def schemas(draw: st.DrawFn, names: str = "RST", simple_key: bool = False) -> Schema:
    """A schema over a prefix of `names` with key arity 1 or 2 and non-key arity 0 to 2"""
    count = draw(st.integers(1, len(names)))
    relations = [
        RelationSymbol(name, 1 if simple_key else draw(st.integers(1, 2)), draw(st.integers(0, 2)))
        for name in names[:count]
    ]
    return Schema.of(*relations)


def terms() -> st.SearchStrategy:
    """Mostly variables, sometimes constants"""
    return st.one_of(st.sampled_from(VARIABLES), st.sampled_from(VARIABLES), st.sampled_from(CONSTANTS))


@st.composite
def atoms(draw: st.DrawFn, schema: Schema) -> Atom:
    """An atom of some relation of `schema`"""
    relation = draw(st.sampled_from(list(schema)))
    key = draw(st.tuples(*[terms()] * relation.key_arity))
    nonkey = draw(st.tuples(*[terms()] * relation.nonkey_arity))
    return Atom(relation, key, nonkey)


@st.composite
def facts(draw: st.DrawFn, schema: Schema) -> Fact:
    """A fact of some relation of `schema` over the constant pool"""
    relation = draw(st.sampled_from(list(schema)))
    key = draw(st.tuples(*[st.sampled_from(CONSTANTS)] * relation.key_arity))
    nonkey = draw(st.tuples(*[st.sampled_from(CONSTANTS)] * relation.nonkey_arity))
    return Fact(relation, key, nonkey)


@st.composite
def queries(draw: st.DrawFn, schema: Schema | None = None, max_atoms: int = 4) -> Query:
    """A query of 1 to `max_atoms` atoms"""
    schema = draw(schemas()) if schema is None else schema
    return Query(frozenset(draw(st.lists(atoms(schema), min_size=1, max_size=max_atoms))), schema)


@st.composite
def databases(draw: st.DrawFn, schema: Schema, max_facts: int = 6) -> Database:
    """A database of up to `max_facts` facts"""
    return Database(frozenset(draw(st.lists(facts(schema), max_size=max_facts))), schema)


@st.composite
def query_and_database(draw: st.DrawFn, max_atoms: int = 3, max_facts: int = 6) -> tuple[Query, Database]:
    """A query and a database over the same schema"""
    schema = draw(schemas())
    return draw(queries(schema, max_atoms)), draw(databases(schema, max_facts))
