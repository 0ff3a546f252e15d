from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Optional

from ..sharpcqa_core.exceptions import SchemaError
from .terms import GroundTerm, Term, Variable, is_ground


@dataclass(frozen=True)
class RelationSymbol:
    """A relation name with its primary-key signature.

    Attributes:
        name (str): The relation name.
        key_arity (int): The number of primary-key positions, at least one.
        nonkey_arity (int): The number of non-primary-key positions.
    """

    name: str
    key_arity: int
    nonkey_arity: int

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaError("Relation names must be nonempty")
        if self.key_arity < 1:
            raise SchemaError(f"Relation {self.name} must have a nonempty primary key, got key arity {self.key_arity}")
        if self.nonkey_arity < 0:
            raise SchemaError(f"Relation {self.name} has a negative non-key arity {self.nonkey_arity}")

    @property
    def arity(self) -> int:
        """The total number of positions"""
        return self.key_arity + self.nonkey_arity

    @property
    def is_simple_key(self) -> bool:
        """Whether the primary key is a single position"""
        return self.key_arity == 1

    def renamed(self, name: str) -> "RelationSymbol":
        """A relation with the same signature and a different name"""
        return RelationSymbol(name, self.key_arity, self.nonkey_arity)

    def __str__(self) -> str:
        return f"rel {self.name} key {self.key_arity} val {self.nonkey_arity}"


@dataclass(frozen=True)
class Atom:
    """A relational atom R[key; nonkey].

    Attributes:
        relation (RelationSymbol): The relation of the atom.
        key (tuple[Term, ...]): The terms at primary-key positions.
        nonkey (tuple[Term, ...]): The terms at non-primary-key positions.
    """

    relation: RelationSymbol
    key: tuple[Term, ...]
    nonkey: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "key", tuple(self.key))
        object.__setattr__(self, "nonkey", tuple(self.nonkey))
        if len(self.key) != self.relation.key_arity or len(self.nonkey) != self.relation.nonkey_arity:
            raise SchemaError(
                f"{self.relation.name} expects {self.relation.key_arity} key and {self.relation.nonkey_arity} "
                f"non-key terms, but got {len(self.key)} and {len(self.nonkey)}"
            )

    @property
    def terms(self) -> tuple[Term, ...]:
        """All terms, key positions first"""
        return self.key + self.nonkey

    @property
    def variables(self) -> frozenset[Variable]:
        """The variables occurring in this atom"""
        return frozenset(t for t in self.terms if isinstance(t, Variable))

    @property
    def is_ground(self) -> bool:
        """Whether no variable occurs in this atom"""
        return all(is_ground(t) for t in self.terms)

    @property
    def block_key(self) -> tuple[str, tuple[Term, ...]]:
        """The (relation name, key tuple) pair shared by key-equal atoms"""
        return (self.relation.name, self.key)

    def with_terms(self, key: Iterable[Term], nonkey: Iterable[Term]) -> "Atom":
        """An atom of the same relation and class holding the given terms"""
        return type(self)(self.relation, tuple(key), tuple(nonkey))

    def __str__(self) -> str:
        key = ",".join(str(t) for t in self.key)
        nonkey = ",".join(str(t) for t in self.nonkey)
        return f"{self.relation.name}[{key}; {nonkey}]" if nonkey else f"{self.relation.name}[{key};]"


@dataclass(frozen=True)
class Fact(Atom):
    """A ground atom"""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_ground:
            raise SchemaError(f"Facts must be ground, but {self} contains a variable")

    @classmethod
    def from_atom(cls, atom: Atom) -> "Fact":
        """Reinterprets a ground atom as a fact"""
        return cls(atom.relation, atom.key, atom.nonkey)

    @property
    def ground_terms(self) -> tuple[GroundTerm, ...]:
        """All terms, typed as ground"""
        return self.terms  # type: ignore[return-value]


def key_equal(a: Atom, b: Atom) -> bool:
    """Whether two facts have the same relation and identical key tuples.

    Args:
        a (Atom): a fact.
        b (Atom): another fact.

    Returns:
        bool: `True` iff `a` and `b` are key-equal.
    """
    return a.relation == b.relation and a.key == b.key


def atom_key(atom: Atom) -> str:
    """The canonical sort key of an atom"""
    return str(atom)


def sorted_atoms(atoms: Iterable[Atom]) -> list[Atom]:
    """Sorts atoms in canonical (lexicographic text) order"""
    return sorted(atoms, key=atom_key)


@dataclass(frozen=True)
class Schema:
    """A finite set of relation symbols with pairwise distinct names"""

    relations: frozenset[RelationSymbol] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "relations", frozenset(self.relations))
        names = [r.name for r in self.relations]
        if len(names) != len(set(names)):
            duplicates = sorted({n for n in names if names.count(n) > 1})
            raise SchemaError(f"Conflicting signatures declared for {', '.join(duplicates)}")

    @classmethod
    def of(cls, *relations: RelationSymbol) -> "Schema":
        """Builds a schema from relation symbols"""
        return cls(frozenset(relations))

    def get(self, name: str) -> Optional[RelationSymbol]:
        """The relation named `name`, if any"""
        return next((r for r in self.relations if r.name == name), None)

    @property
    def names(self) -> frozenset[str]:
        """The relation names of this schema"""
        return frozenset(r.name for r in self.relations)

    @property
    def max_key_arity(self) -> int:
        """The largest key arity, 0 for the empty schema"""
        return max((r.key_arity for r in self.relations), default=0)

    @property
    def max_nonkey_arity(self) -> int:
        """The largest non-key arity, 0 for the empty schema"""
        return max((r.nonkey_arity for r in self.relations), default=0)

    @property
    def is_simple_key(self) -> bool:
        """Whether every relation is simple-key"""
        return all(r.is_simple_key for r in self.relations)

    def __contains__(self, relation: object) -> bool:
        return relation in self.relations

    def __iter__(self) -> Iterator[RelationSymbol]:
        return iter(sorted(self.relations, key=lambda r: r.name))

    def __len__(self) -> int:
        return len(self.relations)
