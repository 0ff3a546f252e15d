from .classification import Classification, TraceStep, check_simple_key, classify_encoded, classify_skbcq
from .easy import find_hardness_witness, is_easy, shape_advisories
from .se3 import Se3Step, Se3Trace, demonstrate_se3
from .simplify import GroundingStep, check_encoded_shape, fresh_constants, simplify, simplify_with_steps
