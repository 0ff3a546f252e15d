import sys
from typing import TYPE_CHECKING

from lazy_imports import LazyImporter

from .sharpcqa_core.constants import SHARPCQA_VERSION as __version__  # noqa: N811

_import_structure = {
    "classifier": [
        "Classification",
        "classify_encoded",
        "classify_skbcq",
        "demonstrate_se3",
        "is_easy",
        "simplify",
    ],
    "encoder": [
        "EncodingContext",
        "NoPreimage",
        "invert_old_encode",
        "is_cxbcq",
        "new_encode",
        "old_encode",
        "selfjoinfree_rewrite",
    ],
    "enums": [
        "Connectivity",
        "EncodingKind",
        "Lemma",
        "Verdict",
    ],
    "harness": ["run_verification"],
    "minimizer": [
        "Unsatisfiable",
        "is_minimal",
        "key_chase",
        "minimize",
    ],
    "model": [
        "Atom",
        "Constant",
        "CoupleConstant",
        "Database",
        "Fact",
        "Query",
        "RelationConstant",
        "RelationSymbol",
        "Schema",
        "Substitution",
        "Variable",
        "complex_part",
        "connected",
        "evaluate",
        "intersection_graph",
        "key_equal",
    ],
    "options": ["VerificationOptions"],
    "qparse": [
        "parse_database",
        "parse_query",
        "parse_schema",
        "serialize",
    ],
    "reducer": [
        "CoupleReduction",
        "couple_database",
        "pad_database",
    ],
    "repairs": [
        "blocks",
        "count_satisfying",
        "repair_count",
    ],
}

if TYPE_CHECKING:
    from .classifier import (
        Classification,
        classify_encoded,
        classify_skbcq,
        demonstrate_se3,
        is_easy,
        simplify,
    )
    from .encoder import (
        EncodingContext,
        NoPreimage,
        invert_old_encode,
        is_cxbcq,
        new_encode,
        old_encode,
        selfjoinfree_rewrite,
    )
    from .enums import Connectivity, EncodingKind, Lemma, Verdict
    from .harness import run_verification
    from .minimizer import Unsatisfiable, is_minimal, key_chase, minimize
    from .model import (
        Atom,
        Constant,
        CoupleConstant,
        Database,
        Fact,
        Query,
        RelationConstant,
        RelationSymbol,
        Schema,
        Substitution,
        Variable,
        complex_part,
        connected,
        evaluate,
        intersection_graph,
        key_equal,
    )
    from .options import VerificationOptions
    from .qparse import parse_database, parse_query, parse_schema, serialize
    from .reducer import CoupleReduction, couple_database, pad_database
    from .repairs import blocks, count_satisfying, repair_count
else:
    sys.modules[__name__] = LazyImporter(
        __name__,
        globals()["__file__"],
        _import_structure,
        extra_objects={"__version__": __version__},
    )
