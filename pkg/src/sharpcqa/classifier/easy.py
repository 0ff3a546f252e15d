from itertools import combinations
from typing import Optional

from ..model import Atom, Query, Variable, complex_part, connected, is_ground
from ..sharpcqa_core.logger import log
from .simplify import check_encoded_shape, simplify


def _key_variable(atom: Atom) -> Optional[Variable]:
    if len(atom.key) < 2 or not isinstance(atom.key[1], Variable):
        return None
    return atom.key[1]


def find_hardness_witness(simplified: Query) -> Optional[tuple[Atom, Atom]]:
    """Finds two atoms that make #CQA of a simplified encoded query #P-hard.

    The witness is the lexicographically least pair of distinct atoms of the complex part whose second key
    positions hold distinct variables and which are connected in the intersection graph.

    Args:
        simplified (Query): a fixpoint of the grounding rule.

    Returns:
        Optional[tuple[Atom, Atom]]: the witness pair in canonical order, or `None` if there is none.
    """
    part = complex_part(simplified)
    candidates = [atom for atom in simplified.sorted_atoms if atom in part]
    for first, second in combinations(candidates, 2):
        x, y = _key_variable(first), _key_variable(second)
        if x is None or y is None or x == y:
            continue
        if connected(simplified, first, second):
            return first, second
    return None


def is_easy(q: Query) -> bool:
    """Whether #CQA(q) is in FP for a unirelational query with a constant first key position.

    Raises:
        NotEncodedQueryError: if `q` does not have that shape.
    """
    check_encoded_shape(q)
    return find_hardness_witness(simplify(q)) is None


def shape_advisories(simplified: Query) -> list[Atom]:
    """Atoms of a simplified query with a variable in the key and a variable outside of it.

    Such atoms are legal fixpoints of the grounding rule, but the hardness argument expects every atom of the
    simplified query to have a constant key or a variable-free non-key part. They are reported, not rejected.
    """
    advisories = [
        atom
        for atom in simplified.sorted_atoms
        if not all(is_ground(t) for t in atom.key) and not all(is_ground(t) for t in atom.nonkey)
    ]
    for atom in advisories:
        log.debug_warning(f"{atom} has a variable key and a non-ground non-key part")
    return advisories
