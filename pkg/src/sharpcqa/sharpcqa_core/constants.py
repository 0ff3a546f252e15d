import os

SHARPCQA_VERSION = "0.3.0"

# Maximum number of repairs the brute-force oracle is allowed to enumerate.
CQA_REPAIR_CAP = int(os.environ.get("CQA_REPAIR_CAP", 1_000_000))

# Maximum number of atoms accepted by the exhaustive minimization search.
SHARPCQA_MAX_MINIMIZE_ATOMS = int(os.environ.get("SHARPCQA_MAX_MINIMIZE_ATOMS", 8))

# When set, the encodings pad with the reserved constant `0#` instead of the user constant `0`.
SHARPCQA_RESERVED_ZERO = os.environ.get("SHARPCQA_RESERVED_ZERO", "0") == "1"

# Name of the single relation used by the unirelational encodings.
ENCODING_RELATION_NAME = "N"

# Bare identifiers starting with one of these letters are read as variables.
VARIABLE_INITIALS = "uvwxyz"

# Separator reserved for generated names (padding variables, fresh constants, fresh relation names).
RESERVED_SEPARATOR = "#"

VERIFICATION_OPTIONS_FORMAT_VERSION = "1.0"
