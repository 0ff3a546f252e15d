from enum import Enum


# pylint: disable=invalid-name
class EncodingKind(Enum):
    """The enum for specifying how non-key positions of encoded atoms are padded"""

    new = 0
    old = 1

    @property
    def pads_with_fresh_variables(self) -> bool:
        """Whether non-key padding uses fresh variables (the corrected encoding) rather than zeros"""
        return self is EncodingKind.new
