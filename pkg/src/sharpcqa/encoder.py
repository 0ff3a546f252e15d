"""Encodings of conjunctive queries into unirelational queries over a fresh relation N.

For a schema whose relations have at most k key and at most m non-key positions, N has k+1 key and m
non-key positions. An atom R[x̄; ȳ] is encoded as N['R', x̄, 0…0; ȳ, padding], where the key is padded
with zeros. The two encodings differ only in the non-key padding:

* the corrected encoding pads with fresh variables, each occurring exactly once in the result;
* the old encoding pads with the zero constant, which puts the padded atoms into the complex part and
  breaks the reduction back to the original query.
"""
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import count
from typing import NamedTuple, Optional, Union

from .enums import EncodingKind
from .model import (
    PADDING_ZERO,
    RESERVED_PADDING_ZERO,
    Atom,
    Constant,
    Database,
    Fact,
    Query,
    RelationConstant,
    RelationSymbol,
    Schema,
    Term,
    Variable,
    is_ground,
)
from .sharpcqa_core.constants import ENCODING_RELATION_NAME, RESERVED_SEPARATOR, SHARPCQA_RESERVED_ZERO
from .sharpcqa_core.exceptions import MalformedEncodingError, UnknownRelationError
from .sharpcqa_core.logger import log


def _fresh_relation_name(schema: Schema) -> str:
    name, suffix = ENCODING_RELATION_NAME, 0
    while name in schema.names:
        suffix += 1
        name = f"{ENCODING_RELATION_NAME}{RESERVED_SEPARATOR}{suffix}"
    return name


@dataclass(frozen=True)
class EncodingContext:
    """The signature arithmetic shared by the encodings and the padding reduction.

    Attributes:
        schema (Schema): the source schema S.
        k (int): the largest key arity in S.
        m (int): the largest non-key arity in S.
        n_symbol (RelationSymbol): the encoding relation, with k+1 key and m non-key positions.
        padding_zero (Constant): the constant used for zero padding.
    """

    schema: Schema
    k: int
    m: int
    n_symbol: RelationSymbol
    padding_zero: Constant = field(default=PADDING_ZERO)

    @classmethod
    def from_schema(cls, schema: Schema, reserve_padding_zero: bool = SHARPCQA_RESERVED_ZERO) -> "EncodingContext":
        """Builds the context of a schema.

        Args:
            schema (Schema): the source schema S.
            reserve_padding_zero (bool, optional): pad with the reserved constant `0#` instead of `0`.
                Defaults to `SHARPCQA_RESERVED_ZERO`.

        Returns:
            EncodingContext: the context with k and m computed over all of S.
        """
        k, m = schema.max_key_arity, schema.max_nonkey_arity
        n_symbol = RelationSymbol(_fresh_relation_name(schema), k + 1, m)
        return cls(schema, k, m, n_symbol, RESERVED_PADDING_ZERO if reserve_padding_zero else PADDING_ZERO)

    def relation(self, name: str) -> RelationSymbol:
        """The source relation named `name`.

        Raises:
            UnknownRelationError: if S has no such relation.
        """
        relation = self.schema.get(name)
        if relation is None:
            raise UnknownRelationError(f"Relation {name} is not part of the encoding schema {sorted(self.schema.names)}")
        return relation

    def pad(self, atom: Atom, nonkey_padding: Iterator[Term]) -> Atom:
        """Encodes a single atom, drawing non-key padding terms from `nonkey_padding`"""
        relation = self.relation(atom.relation.name)
        if relation != atom.relation:
            raise UnknownRelationError(f"{atom} does not match the schema signature '{relation}'")
        key_padding = (self.padding_zero,) * (self.k - relation.key_arity)
        nonkey_padding_terms = tuple(next(nonkey_padding) for _ in range(self.m - relation.nonkey_arity))
        return Atom(
            self.n_symbol,
            (RelationConstant(relation.name), *atom.key, *key_padding),
            (*atom.nonkey, *nonkey_padding_terms),
        )

    def decode(self, encoded: Atom) -> tuple[Atom, tuple[Term, ...]]:
        """Strips the relation constant and the padding from an N-atom.

        Returns:
            tuple[Atom, tuple[Term, ...]]: the source atom and the padding terms (key padding first).

        Raises:
            MalformedEncodingError: if `encoded` is not an N-atom whose first key term names a relation of S.
        """
        if encoded.relation != self.n_symbol:
            raise MalformedEncodingError(f"{encoded} is not an atom of '{self.n_symbol}'")
        head = encoded.key[0]
        if not isinstance(head, RelationConstant) or self.schema.get(head.name) is None:
            raise MalformedEncodingError(f"The first key position of {encoded} is not a relation name of the schema")
        relation = self.relation(head.name)
        key = encoded.key[1 : 1 + relation.key_arity]
        nonkey = encoded.nonkey[: relation.nonkey_arity]
        padding = encoded.key[1 + relation.key_arity :] + encoded.nonkey[relation.nonkey_arity :]
        return Atom(relation, key, nonkey), padding

    def zeros(self) -> Iterator[Term]:
        """An endless supply of padding zeros"""
        while True:
            yield self.padding_zero


def padding_variables(used: frozenset[Variable] = frozenset()) -> Iterator[Term]:
    """Fresh padding variables z#1, z#2, ... skipping those in `used`"""
    for index in count(1):
        variable = Variable(f"z{RESERVED_SEPARATOR}{index}")
        if variable not in used:
            yield variable


class Encoding(NamedTuple):
    """An encoded query with the source atom of each encoded atom"""

    query: Query
    origin: dict[Atom, Atom]


def encode_with_origin(q: Query, schema: Optional[Schema] = None, kind: EncodingKind = EncodingKind.new) -> Encoding:
    """Encodes `q` over N and records where each encoded atom comes from.

    Args:
        q (Query): the query to encode.
        schema (Optional[Schema], optional): the schema S. Defaults to the schema of `q`.
        kind (EncodingKind, optional): the corrected (`new`) or the old encoding. Defaults to `new`.

    Raises:
        UnknownRelationError: if an atom of `q` uses a relation outside of S.

    Returns:
        Encoding: the unirelational query and the map from its atoms to the atoms of `q`.
    """
    ctx = EncodingContext.from_schema(schema if schema is not None else q.schema)
    supply = padding_variables(q.variables) if kind.pads_with_fresh_variables else ctx.zeros()
    origin = {ctx.pad(atom, supply): atom for atom in q.sorted_atoms}
    return Encoding(Query(frozenset(origin), Schema.of(ctx.n_symbol)), origin)


def new_encode(q: Query, schema: Optional[Schema] = None) -> Query:
    """The corrected encoding: non-key padding with fresh variables z#1, z#2, ... in canonical atom order"""
    return encode_with_origin(q, schema, EncodingKind.new).query


def old_encode(q: Query, schema: Optional[Schema] = None) -> Query:
    """The old encoding: non-key padding with the zero constant"""
    return encode_with_origin(q, schema, EncodingKind.old).query


def encode_fact(fact: Fact, ctx: EncodingContext) -> Fact:
    """The fact map of the old encoding, N['R', ā, 0…0; b̄, 0…0]"""
    return Fact.from_atom(ctx.pad(fact, ctx.zeros()))


def decode_atom(encoded: Atom, ctx: EncodingContext) -> Atom:
    """The source atom of an N-atom, without its relation constant and padding"""
    return ctx.decode(encoded)[0]


def is_cxbcq(q: Query) -> bool:
    """Whether `q` is unirelational with two key positions and a constant at the first position of every atom"""
    return q.is_unirelational and all(a.relation.key_arity == 2 and is_ground(a.key[0]) for a in q.atoms)


@dataclass(frozen=True)
class NoPreimage:
    """The outcome of inverting a database that is not the image of any database over S.

    Attributes:
        witness (Fact): a fact of the database outside of the image of the fact map.
        reason (str): why the witness has no preimage.
    """

    witness: Fact
    reason: str

    def __str__(self) -> str:
        return f"NoPreimage: {self.witness}"


def invert_old_encode(db: Database, schema: Schema) -> Union[Database, NoPreimage]:
    """Finds the database db' over S whose old encoding is `db`, if it exists.

    Args:
        db (Database): a database over N.
        schema (Schema): the schema S.

    Raises:
        MalformedEncodingError: if a fact is not an N-fact whose first key position names a relation of S.

    Returns:
        Union[Database, NoPreimage]: the unique preimage, or `NoPreimage` with the canonically first fact whose
            padding positions are not all zero.
    """
    ctx = EncodingContext.from_schema(schema)
    preimage: list[Fact] = []
    for fact in db.sorted_facts:
        if fact.relation != ctx.n_symbol:
            raise MalformedEncodingError(f"{fact} does not have the signature of '{ctx.n_symbol}'")
        atom, padding = ctx.decode(fact)
        offending = [t for t in padding if t != ctx.padding_zero]
        if offending:
            log.debug(f"{fact} has non-zero padding {', '.join(str(t) for t in offending)}")
            return NoPreimage(fact, f"padding positions hold {', '.join(str(t) for t in offending)} instead of zero")
        preimage.append(Fact.from_atom(atom))
    return Database(frozenset(preimage), schema)


class SelfJoinFreeRewrite(NamedTuple):
    """A self-join-free copy of a query.

    Attributes:
        query (Query): q', in which the i-th R-atom of q (in canonical order) uses the fresh relation R#i.
        origin (dict[Atom, Atom]): the atom of q each atom of q' was copied from.
    """

    query: Query
    origin: dict[Atom, Atom]

    @property
    def source(self) -> Query:
        """The rewritten query q"""
        return Query(frozenset(self.origin.values()))

    def atom_for(self, relation: RelationSymbol) -> Atom:
        """The unique atom of q' using `relation`.

        Raises:
            UnknownRelationError: if no atom of q' uses `relation`.
        """
        for atom in self.origin:
            if atom.relation == relation:
                return atom
        raise UnknownRelationError(f"Relation {relation.name} has no atom in the rewritten query")


def selfjoinfree_rewrite(q: Query) -> SelfJoinFreeRewrite:
    """Renames the relation of every atom of `q` so that no relation occurs twice.

    Args:
        q (Query): a query.

    Returns:
        SelfJoinFreeRewrite: q' with |q'| = |q| and the map back to the atoms of `q`.
    """
    counters: dict[str, count] = {}
    origin: dict[Atom, Atom] = {}
    for atom in q.sorted_atoms:
        index = next(counters.setdefault(atom.relation.name, count(1)))
        fresh = atom.relation.renamed(f"{atom.relation.name}{RESERVED_SEPARATOR}{index}")
        origin[Atom(fresh, atom.key, atom.nonkey)] = atom
    return SelfJoinFreeRewrite(Query(frozenset(origin)), origin)
