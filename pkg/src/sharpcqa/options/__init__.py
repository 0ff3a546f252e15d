from .load import load_json_or_yaml, read_path_or_literal
from .options_mixin import OptionsMixin
from .verification_options import VerificationOptions
