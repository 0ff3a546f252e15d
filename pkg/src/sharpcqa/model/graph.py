import networkx as nx

from ..enums import Connectivity
from ..sharpcqa_core.exceptions import AtomNotInQueryError
from .atoms import Atom
from .query import Query
from .terms import is_ground


def intersection_graph(q: Query) -> nx.Graph:
    """The undirected graph on the atoms of `q` with an edge between atoms sharing a variable.

    Args:
        q (Query): a query.

    Returns:
        nx.Graph: a loop-free graph whose nodes are exactly the atoms of `q`.
    """
    graph = nx.Graph()
    atoms = q.sorted_atoms
    graph.add_nodes_from(atoms)
    for i, first in enumerate(atoms):
        for second in atoms[i + 1 :]:
            shared = first.variables & second.variables
            if shared:
                graph.add_edge(first, second, variables=frozenset(shared))
    return graph


def _check_membership(q: Query, *atoms: Atom) -> None:
    for atom in atoms:
        if atom not in q:
            raise AtomNotInQueryError(f"{atom} is not an atom of {q}")


def adjacent(q: Query, f1: Atom, f2: Atom) -> bool:
    """Whether `f1` and `f2` share a variable. An atom is adjacent to itself."""
    _check_membership(q, f1, f2)
    return f1 == f2 or bool(f1.variables & f2.variables)


def connected(q: Query, f1: Atom, f2: Atom, mode: Connectivity = Connectivity.PATH) -> bool:
    """Whether `f1` and `f2` are connected in the intersection graph of `q`.

    Args:
        q (Query): a query.
        f1 (Atom): an atom of `q`.
        f2 (Atom): an atom of `q`.
        mode (Connectivity, optional): path-reachability (default) or adjacency.

    Raises:
        AtomNotInQueryError: if `f1` or `f2` is not an atom of `q`.

    Returns:
        bool: whether the atoms are connected.
    """
    if mode is Connectivity.ADJACENT:
        return adjacent(q, f1, f2)
    _check_membership(q, f1, f2)
    return nx.has_path(intersection_graph(q), f1, f2)


def complex_part(q: Query) -> frozenset[Atom]:
    """The atoms of `q` having, at some non-key position, a constant or a variable occurring twice or more in `q`"""
    occurrences = q.occurrences
    return frozenset(
        atom
        for atom in q.atoms
        if any(is_ground(t) or occurrences[t] >= 2 for t in atom.nonkey)
    )
