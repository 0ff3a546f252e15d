from .connectivity import Connectivity
from .encoding_kind import EncodingKind
from .lemma import Lemma
from .verdict import Verdict
