"""Many-one reductions between #CQA problems, as maps on facts extended pointwise to databases.

* Padding: #CQA(q) reduces to #CQA of the corrected N-encoding of q by mapping R[ā; b̄] to
  N['R', ā, 0…0; b̄, 0…0]. The map depends on signatures only, not on the atoms of q.
* Couples: for a minimal q and its self-join-free rewrite q', #CQA(q') reduces to #CQA(q) by mapping an
  R#i-fact R#i[a1, …, an] to R[<a1|x1>, …, <an|xn>], where R#i[x1, …, xn] is the R#i-atom of q'.

Both maps preserve and reflect key-equality, so repairs of the image are exactly the images of repairs.
"""
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations

from .encoder import EncodingContext, SelfJoinFreeRewrite, encode_fact, selfjoinfree_rewrite
from .minimizer import first_key_collision
from .model import Atom, Database, Fact, Query, RelationSymbol, Schema, couple, key_equal
from .sharpcqa_core.exceptions import ArityMismatchError, KeyCollisionError, UnknownRelationError


def pad_fact(fact: Fact, ctx: EncodingContext) -> Fact:
    """Maps an R-fact R[ā; b̄] to N['R', ā, 0…0; b̄, 0…0].

    Raises:
        UnknownRelationError: if the relation of `fact` is not in the schema of `ctx`.
    """
    return encode_fact(fact, ctx)


def pad_database(db: Database, ctx: EncodingContext) -> Database:
    """Applies `pad_fact` to every fact of `db`"""
    return Database(frozenset(pad_fact(fact, ctx) for fact in db.facts), Schema.of(ctx.n_symbol))


def couple_fact(fact: Fact, atom: Atom, target: RelationSymbol) -> Fact:
    """Maps an R#i-fact R#i[a1, …, an] to target[<a1|x1>, …, <an|xn>] for the atom R#i[x1, …, xn].

    Args:
        fact (Fact): a fact of the relation of `atom`.
        atom (Atom): the atom of q' using the relation of `fact`.
        target (RelationSymbol): the relation of q that `atom` was copied from.

    Raises:
        UnknownRelationError: if `fact` and `atom` use different relations.
        ArityMismatchError: if the signature of `target` differs from the signature of `atom`.

    Returns:
        Fact: the fact of `target` holding the couples, with <c|c> collapsed to c.
    """
    if fact.relation != atom.relation:
        raise UnknownRelationError(f"{fact} cannot be mapped through {atom}")
    if (target.key_arity, target.nonkey_arity) != (atom.relation.key_arity, atom.relation.nonkey_arity):
        raise ArityMismatchError(f"'{target}' does not have the signature of '{atom.relation}'")
    return Fact(
        target,
        tuple(couple(a, x) for a, x in zip(fact.ground_terms[: target.key_arity], atom.key)),
        tuple(couple(a, x) for a, x in zip(fact.ground_terms[target.key_arity :], atom.nonkey)),
    )


@dataclass(frozen=True)
class CoupleReduction:
    """The reduction from #CQA(q') to #CQA(q) for a query q without key-equal atoms.

    Attributes:
        rewrite (SelfJoinFreeRewrite): q' and the map from its atoms to the atoms of q.
    """

    rewrite: SelfJoinFreeRewrite

    def __post_init__(self) -> None:
        collision = first_key_collision(self.source)
        if collision is not None:
            first, second = collision
            raise KeyCollisionError(
                f"{first} and {second} agree on relation and key, so couples would not transfer key-equality"
            )

    @classmethod
    def from_query(cls, q: Query) -> "CoupleReduction":
        """Builds the reduction for `q` and its self-join-free rewrite.

        Raises:
            KeyCollisionError: if two atoms of `q` share relation and key.
        """
        return cls(selfjoinfree_rewrite(q))

    @property
    def source(self) -> Query:
        """The query q"""
        return self.rewrite.source

    @property
    def rewritten(self) -> Query:
        """The self-join-free query q'"""
        return self.rewrite.query

    def couple_fact(self, fact: Fact) -> Fact:
        """Maps a fact over q' to a fact over q"""
        atom = self.rewrite.atom_for(fact.relation)
        return couple_fact(fact, atom, self.rewrite.origin[atom].relation)

    def couple_database(self, db: Database) -> Database:
        """Applies `couple_fact` to every fact of `db`"""
        return Database(frozenset(self.couple_fact(fact) for fact in db.facts))


def couple_database(db: Database, rewrite: SelfJoinFreeRewrite) -> Database:
    """Maps a database over the relations of q' to a database over the relations of q.

    Raises:
        KeyCollisionError: if two atoms of q share relation and key.
        UnknownRelationError: if a fact of `db` uses a relation without an atom in q'.
    """
    return CoupleReduction(rewrite).couple_database(db)


def key_equality_transfer_holds(facts: Iterable[Fact], fact_map: Callable[[Fact], Fact]) -> bool:
    """Whether A ∼ B iff f(A) ∼ f(B) for all pairs of `facts`"""
    images = {fact: fact_map(fact) for fact in facts}
    return all(
        key_equal(first, second) == key_equal(images[first], images[second])
        for first, second in combinations(images, 2)
    )
