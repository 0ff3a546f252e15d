from .atoms import Atom, Fact, RelationSymbol, Schema, key_equal, sorted_atoms
from .graph import adjacent, complex_part, connected, intersection_graph
from .homomorphism import evaluate, find_valuation, homomorphisms
from .query import Database, Query
from .substitution import Substitution
from .terms import (
    PADDING_ZERO,
    RESERVED_PADDING_ZERO,
    Constant,
    CoupleConstant,
    GroundTerm,
    RelationConstant,
    Term,
    Variable,
    couple,
    is_ground,
)
