from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Optional

from ..sharpcqa_core.exceptions import SchemaError
from .atoms import Atom, Fact, Schema, sorted_atoms
from .substitution import Substitution
from .terms import GroundTerm, Term, Variable, is_ground


def _schema_for(items: Iterable[Atom], schema: Optional[Schema]) -> Schema:
    inferred = Schema(frozenset(a.relation for a in items))
    if schema is None:
        return inferred
    unknown = inferred.relations - schema.relations
    if unknown:
        names = ", ".join(sorted(str(r) for r in unknown))
        raise SchemaError(f"Relations not in schema: {names}")
    return schema


@dataclass(frozen=True)
class Query:
    """A Boolean conjunctive query: a finite set of atoms over a schema.

    Attributes:
        atoms (frozenset[Atom]): The atoms of the query.
        schema (Schema): A schema containing the relation of every atom.
    """

    atoms: frozenset[Atom]
    schema: Schema = field(default_factory=Schema)

    def __post_init__(self) -> None:
        atoms = frozenset(Atom(a.relation, a.key, a.nonkey) if isinstance(a, Fact) else a for a in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "schema", _schema_for(atoms, self.schema if self.schema.relations else None))

    @classmethod
    def of(cls, *atoms: Atom, schema: Optional[Schema] = None) -> "Query":
        """Builds a query from atoms, inferring the schema when none is given"""
        return cls(frozenset(atoms), schema or Schema())

    @property
    def sorted_atoms(self) -> list[Atom]:
        """The atoms in canonical order"""
        return sorted_atoms(self.atoms)

    @property
    def variables(self) -> frozenset[Variable]:
        """vars(q)"""
        return frozenset(v for a in self.atoms for v in a.variables)

    @property
    def constants(self) -> frozenset[GroundTerm]:
        """The ground terms occurring in the query"""
        return frozenset(t for a in self.atoms for t in a.terms if is_ground(t))  # type: ignore[misc]

    @property
    def occurrences(self) -> Counter[Term]:
        """The number of occurrences of each term over all positions of all atoms"""
        return Counter(t for a in self.atoms for t in a.terms)

    @property
    def is_self_join_free(self) -> bool:
        """Whether no relation name occurs in two different atoms"""
        names = [a.relation.name for a in self.atoms]
        return len(names) == len(set(names))

    @property
    def is_unirelational(self) -> bool:
        """Whether all atoms share one relation"""
        return len({a.relation for a in self.atoms}) <= 1

    def substitute(self, theta: Substitution) -> "Query":
        """θ(q), merging atoms that become identical"""
        return Query(frozenset(theta.apply_atom(a) for a in self.atoms), self.schema)

    def with_atoms(self, atoms: Iterable[Atom]) -> "Query":
        """A query over the same schema holding `atoms`"""
        return Query(frozenset(atoms), self.schema)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.sorted_atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.atoms

    def __str__(self) -> str:
        return ", ".join(str(a) for a in self.sorted_atoms)


@dataclass(frozen=True)
class Database:
    """A finite set of facts over a schema.

    Attributes:
        facts (frozenset[Fact]): The facts of the database.
        schema (Schema): A schema containing the relation of every fact.
    """

    facts: frozenset[Fact]
    schema: Schema = field(default_factory=Schema)

    def __post_init__(self) -> None:
        facts = frozenset(a if isinstance(a, Fact) else Fact.from_atom(a) for a in self.facts)
        object.__setattr__(self, "facts", facts)
        object.__setattr__(self, "schema", _schema_for(facts, self.schema if self.schema.relations else None))

    @classmethod
    def of(cls, *facts: Fact, schema: Optional[Schema] = None) -> "Database":
        """Builds a database from facts, inferring the schema when none is given"""
        return cls(frozenset(facts), schema or Schema())

    @property
    def sorted_facts(self) -> list[Fact]:
        """The facts in canonical order"""
        return sorted_atoms(self.facts)  # type: ignore[return-value]

    @property
    def is_consistent(self) -> bool:
        """Whether no two distinct facts are key-equal"""
        return len({f.block_key for f in self.facts}) == len(self.facts)

    def with_facts(self, facts: Iterable[Fact]) -> "Database":
        """A database over the same schema holding `facts`"""
        return Database(frozenset(facts), self.schema)

    def __iter__(self) -> Iterator[Fact]:
        return iter(self.sorted_facts)

    def __len__(self) -> int:
        return len(self.facts)

    def __contains__(self, fact: object) -> bool:
        return fact in self.facts

    def __str__(self) -> str:
        return "\n".join(str(f) for f in self.sorted_facts)
