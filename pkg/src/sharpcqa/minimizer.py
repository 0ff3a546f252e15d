"""Consistent satisfiability and minimization of conjunctive queries under primary keys.

In a consistent database two facts agreeing on relation and key are the same fact. The key chase applies
this to the query itself: two atoms with the same relation and syntactically identical keys must be
mapped to the same fact, so their non-key terms are unified. If unification fails on two distinct
constants, no consistent database satisfies the query. Otherwise the chased query is satisfied by the
database obtained by freezing its variables to fresh constants, and it is satisfied by exactly the same
repairs as the input query.

Minimization then contracts the chased query to its core by repeatedly applying endomorphisms whose image
is a proper subset of the query.
"""
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, count
from typing import Optional, Union

from .model import Atom, Constant, Database, Fact, GroundTerm, Query, Substitution, Term, Variable, homomorphisms
from .sharpcqa_core.constants import RESERVED_SEPARATOR, SHARPCQA_MAX_MINIMIZE_ATOMS
from .sharpcqa_core.exceptions import MinimizationLimitError, UnsatisfiableQueryError
from .sharpcqa_core.logger import log


@dataclass(frozen=True)
class Unsatisfiable:
    """The outcome of a key chase that failed on two distinct constants.

    Attributes:
        atoms (tuple[Atom, Atom]): the key-equal atoms whose unification failed.
        clash (tuple[Term, Term]): the two distinct constants forced to be equal.
    """

    atoms: tuple[Atom, Atom]
    clash: tuple[Term, Term]

    def __str__(self) -> str:
        first, second = self.atoms
        left, right = self.clash
        return f"Unsatisfiable: {first} and {second} force {left} = {right}"


def _unify(pairs: list[tuple[Term, Term]]) -> Union[Substitution, tuple[Term, Term]]:
    """The most general unifier of term pairs, or the first pair of clashing constants"""
    binding: dict[Variable, Term] = {}

    def resolve(term: Term) -> Term:
        while isinstance(term, Variable) and term in binding:
            term = binding[term]
        return term

    for left, right in pairs:
        left, right = resolve(left), resolve(right)
        if left == right:
            continue
        if isinstance(left, Variable) and isinstance(right, Variable):
            keep, drop = sorted((left, right), key=str)
            binding[drop] = keep
        elif isinstance(left, Variable):
            binding[left] = right
        elif isinstance(right, Variable):
            binding[right] = left
        else:
            return (left, right)
    return Substitution({v: resolve(v) for v in binding})


def first_key_collision(q: Query) -> Optional[tuple[Atom, Atom]]:
    """The lexicographically least pair of distinct atoms with the same relation and key"""
    for first, second in combinations(q.sorted_atoms, 2):
        if first.block_key == second.block_key:
            return first, second
    return None


def key_chase(q: Query) -> Union[Query, Unsatisfiable]:
    """Unifies key-equal atoms until no two distinct atoms share relation and key.

    Args:
        q (Query): a Boolean conjunctive query.

    Returns:
        Union[Query, Unsatisfiable]: the chased query, or `Unsatisfiable` if the chase fails.
    """
    while (collision := first_key_collision(q)) is not None:
        first, second = collision
        unifier = _unify(list(zip(first.nonkey, second.nonkey)))
        if not isinstance(unifier, Substitution):
            log.debug(f"Key chase failed on {first} and {second}: {unifier[0]} != {unifier[1]}")
            return Unsatisfiable(collision, unifier)
        log.debug(f"Key chase merges {first} and {second} with {unifier}")
        q = q.substitute(unifier)
    return q


def is_consistently_satisfiable(q: Query) -> bool:
    """Whether some consistent database satisfies `q`"""
    return not isinstance(key_chase(q), Unsatisfiable)


def freeze(q: Query) -> Database:
    """The canonical database of `q`, with each variable v replaced by the fresh constant `f#v`.

    For a chased query the result is consistent and satisfies `q`. A name already taken by a constant of `q`
    gets a numeric suffix, f#v#1, f#v#2, ...
    """
    used: set[GroundTerm] = set(q.constants)
    frozen: dict[Variable, Term] = {}
    for v in sorted(q.variables, key=lambda variable: variable.name):
        base = f"f{RESERVED_SEPARATOR}{v.name}"
        constant, suffixes = Constant(base), count(1)
        while constant in used:
            constant = Constant(f"{base}{RESERVED_SEPARATOR}{next(suffixes)}")
        used.add(constant)
        frozen[v] = constant
    theta = Substitution(frozen)
    return Database(frozenset(Fact.from_atom(theta.apply_atom(a)) for a in q.atoms), q.schema)


def endomorphisms(q: Query) -> Iterator[Substitution]:
    """Enumerates all substitutions θ over vars(q) with θ(q) ⊆ q"""
    return homomorphisms(q.atoms, q.atoms)


def _proper_contraction(q: Query) -> Optional[Substitution]:
    """An endomorphism whose image misses the canonically first possible atom, if any"""
    for atom in q.sorted_atoms:
        theta = next(homomorphisms(q.atoms, q.atoms - {atom}), None)
        if theta is not None:
            return theta
    return None


def is_minimal(q: Query) -> bool:
    """Whether no two atoms share relation and key and no substitution maps `q` to a proper subset of itself"""
    if first_key_collision(q) is not None:
        return False
    return _proper_contraction(q) is None


def minimize(q: Query, max_atoms: int = SHARPCQA_MAX_MINIMIZE_ATOMS) -> Query:
    """Computes a minimal query satisfied by exactly the same repairs as `q`.

    Args:
        q (Query): a consistently satisfiable query.
        max_atoms (int, optional): the largest query size accepted by the exhaustive search.
            Defaults to `SHARPCQA_MAX_MINIMIZE_ATOMS`.

    Raises:
        UnsatisfiableQueryError: if the key chase of `q` fails.
        MinimizationLimitError: if the chased query has more than `max_atoms` atoms.

    Returns:
        Query: the key-chased core of `q`, over the schema of `q`.
    """
    chased = key_chase(q)
    if isinstance(chased, Unsatisfiable):
        raise UnsatisfiableQueryError(f"{q} cannot be minimized. {chased}")
    if len(chased) > max_atoms:
        raise MinimizationLimitError(len(chased), max_atoms, "Set SHARPCQA_MAX_MINIMIZE_ATOMS to raise the limit")
    while (theta := _proper_contraction(chased)) is not None:
        contracted = chased.substitute(theta)
        log.debug(f"Contracting {len(chased)} -> {len(contracted)} atoms with {theta}")
        chased = contracted
    return chased

