"""Seeded generation of small random schemas, queries and databases.

Every trial draws from its own `random.Random` seeded with `"{seed}:{index}"`, so a trial can be reproduced
from the run seed and its index alone, whatever the number of worker threads.
"""
import random
import string
from dataclasses import dataclass

from ..minimizer import is_consistently_satisfiable
from ..model import Atom, Constant, Database, Fact, Query, RelationSymbol, Schema, Term, Variable
from ..options import VerificationOptions
from ..qparse import serialize_database, serialize_query

RELATION_NAMES = "RST" + "".join(c for c in string.ascii_uppercase if c not in "RSTN") + "N"
BASE_CONSTANTS = ("0", "1", "a", "b")
VARIABLE_NAMES = ("x", "y", "z", "u", "v", "w")
MAX_KEY_ARITY = 2
MAX_NONKEY_ARITY = 2
MAX_RESAMPLES = 100


def trial_rng(seed: int, index: int) -> random.Random:
    """The random generator of trial `index` in a run seeded with `seed`"""
    return random.Random(f"{seed}:{index}")


def constant_pool(size: int) -> list[Constant]:
    """The first `size` constants of 0, 1, a, b, k4, k5, ..."""
    names = list(BASE_CONSTANTS[:size]) + [f"k{i}" for i in range(len(BASE_CONSTANTS), size)]
    return [Constant(name) for name in names]


def variable_pool(size: int) -> list[Variable]:
    """`size` distinct variables x, y, z, u, v, w, x6, x7, ..."""
    names = list(VARIABLE_NAMES[:size]) + [f"x{i}" for i in range(len(VARIABLE_NAMES), size)]
    return [Variable(name) for name in names]


def random_schema(rng: random.Random, options: VerificationOptions) -> Schema:
    """A schema of 1 to `max_relations` relations with small random signatures"""
    count = rng.randint(1, options.max_relations)
    return Schema.of(
        *(
            RelationSymbol(name, rng.randint(1, MAX_KEY_ARITY), rng.randint(0, MAX_NONKEY_ARITY))
            for name in RELATION_NAMES[:count]
        )
    )


def random_query(rng: random.Random, schema: Schema, options: VerificationOptions) -> Query:
    """A query of 1 to `max_atoms` atoms over `schema`.

    Terms are variables four times out of five, drawn from a pool of the atom count plus up to
    `max_extra_variables` variables, and constants of the constant pool otherwise.
    """
    relations = list(schema)
    size = rng.randint(1, options.max_atoms)
    variables = variable_pool(size + rng.randint(0, options.max_extra_variables))
    constants = constant_pool(options.constant_pool)

    def term() -> Term:
        return rng.choice(variables) if rng.random() < 0.8 else rng.choice(constants)

    atoms = []
    for _ in range(size):
        relation = rng.choice(relations)
        key = tuple(term() for _ in range(relation.key_arity))
        nonkey = tuple(term() for _ in range(relation.nonkey_arity))
        atoms.append(Atom(relation, key, nonkey))
    return Query(frozenset(atoms), schema)


def random_satisfiable_query(rng: random.Random, schema: Schema, options: VerificationOptions) -> Query:
    """A random query that some consistent database satisfies.

    Raises:
        RuntimeError: if no such query is drawn after `MAX_RESAMPLES` attempts.
    """
    for _ in range(MAX_RESAMPLES):
        q = random_query(rng, schema, options)
        if is_consistently_satisfiable(q):
            return q
    raise RuntimeError(f"No consistently satisfiable query drawn in {MAX_RESAMPLES} attempts")


def random_database(
    rng: random.Random, schema: Schema, options: VerificationOptions, constants: list[Constant]
) -> Database:
    """A database of at most `max_blocks` blocks of at most `max_block_size` facts over `schema`.

    Blocks whose random keys coincide are merged, and a block of a relation without non-key positions
    holds a single fact.
    """
    relations = list(schema)
    facts: set[Fact] = set()
    for _ in range(rng.randint(0, options.max_blocks)):
        relation = rng.choice(relations)
        key = tuple(rng.choice(constants) for _ in range(relation.key_arity))
        for _ in range(rng.randint(1, options.max_block_size)):
            nonkey = tuple(rng.choice(constants) for _ in range(relation.nonkey_arity))
            facts.add(Fact(relation, key, nonkey))
    return Database(frozenset(facts), schema)


@dataclass(frozen=True)
class Instance:
    """A query and a database for one trial"""

    query: Query
    db: Database

    def __str__(self) -> str:
        return f"query:\n{serialize_query(self.query)}\ndatabase:\n{serialize_database(self.db)}"


def padding_instance(rng: random.Random, options: VerificationOptions) -> Instance:
    """A random query and a random database over the same schema"""
    schema = random_schema(rng, options)
    q = random_query(rng, schema, options)
    return Instance(q, random_database(rng, schema, options, constant_pool(options.constant_pool)))
