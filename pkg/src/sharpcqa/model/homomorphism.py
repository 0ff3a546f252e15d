"""Backtracking search for homomorphisms between sets of atoms.

A homomorphism from `source` to `target` is a substitution θ over the variables of `source` with
θ(source) ⊆ target. Terms of `target` are treated as opaque values: a target variable is never bound,
it is simply a value a source variable can be mapped to. This lets one matcher serve both query
evaluation (target is a database) and endomorphism search (target is the query itself).
"""
from collections import defaultdict
from collections.abc import Collection, Iterator
from typing import Optional

from .atoms import Atom
from .query import Database, Query
from .substitution import Substitution
from .terms import Term, Variable


def _match(atom: Atom, candidate: Atom, binding: dict[Variable, Term]) -> Optional[list[Variable]]:
    """Extends `binding` so that `atom` maps onto `candidate`.

    Returns:
        Optional[list[Variable]]: the newly bound variables, or `None` if the atoms do not match
            (in which case `binding` is left untouched).
    """
    if atom.relation != candidate.relation:
        return None
    bound: list[Variable] = []
    for term, value in zip(atom.terms, candidate.terms):
        if isinstance(term, Variable):
            current = binding.get(term)
            if current is None:
                binding[term] = value
                bound.append(term)
                continue
            if current == value:
                continue
        elif term == value:
            continue
        for variable in bound:
            del binding[variable]
        return None
    return bound


def homomorphisms(source: Collection[Atom], target: Collection[Atom]) -> Iterator[Substitution]:
    """Enumerates all substitutions θ over the variables of `source` with θ(source) ⊆ `target`.

    Atoms are matched most-constrained first: the atom with the fewest candidates goes first, ties broken
    by canonical order. Each homomorphism is yielded exactly once.

    Args:
        source (Collection[Atom]): the atoms to map.
        target (Collection[Atom]): the atoms to map into.

    Yields:
        Substitution: every homomorphism, in a deterministic order.
    """
    by_relation: dict[str, list[Atom]] = defaultdict(list)
    for candidate in sorted(target, key=str):
        by_relation[candidate.relation.name].append(candidate)

    ordered = sorted(source, key=lambda a: (len(by_relation[a.relation.name]), str(a)))
    binding: dict[Variable, Term] = {}

    def search(depth: int) -> Iterator[Substitution]:
        if depth == len(ordered):
            yield Substitution(binding)
            return
        atom = ordered[depth]
        for candidate in by_relation[atom.relation.name]:
            bound = _match(atom, candidate, binding)
            if bound is None:
                continue
            yield from search(depth + 1)
            for variable in bound:
                del binding[variable]

    yield from search(0)


def find_valuation(q: Query, db: Database) -> Optional[Substitution]:
    """The first valuation θ with θ(q) ⊆ db in search order, if any"""
    return next(homomorphisms(q.atoms, db.facts), None)


def evaluate(q: Query, db: Database) -> bool:
    """Whether `db` satisfies the Boolean conjunctive query `q`.

    Args:
        q (Query): a Boolean conjunctive query.
        db (Database): a database.

    Returns:
        bool: `True` iff some valuation maps every atom of `q` to a fact of `db`.
    """
    return find_valuation(q, db) is not None
