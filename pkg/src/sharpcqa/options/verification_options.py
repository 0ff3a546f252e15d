from dataclasses import dataclass, field

from ..enums import Lemma
from ..sharpcqa_core.constants import CQA_REPAIR_CAP, VERIFICATION_OPTIONS_FORMAT_VERSION
from .options_mixin import OptionsMixin


# pylint: disable=too-many-instance-attributes
@dataclass
class VerificationOptions(OptionsMixin):
    """Options of a randomized verification run.

    Instances are kept small enough for exhaustive repair enumeration: at most `max_relations` relations,
    `max_atoms` atoms, `max_extra_variables` variables beyond the atom count, and databases of at most
    `max_blocks` blocks of at most `max_block_size` facts over a pool of `constant_pool` constants.
    """

    __version__ = VERIFICATION_OPTIONS_FORMAT_VERSION

    lemma: Lemma = Lemma.PADDING
    trials: int = field(default=100)
    seed: int = field(default=0)
    max_blocks: int = field(default=5)
    max_block_size: int = field(default=3)
    max_relations: int = field(default=3)
    max_atoms: int = field(default=4)
    max_extra_variables: int = field(default=3)
    constant_pool: int = field(default=4)
    repair_cap: int = field(default=CQA_REPAIR_CAP)
    jobs: int = field(default=1)

    def check_trials(self, trials: int) -> bool:
        """trials must be non-negative"""
        return trials >= 0

    def check_max_blocks(self, max_blocks: int) -> bool:
        """max_blocks must be non-negative"""
        return max_blocks >= 0

    def check_max_block_size(self, max_block_size: int) -> bool:
        """max_block_size must be at least 1"""
        return max_block_size >= 1

    def check_max_relations(self, max_relations: int) -> bool:
        """max_relations must be between 1 and 26"""
        return 1 <= max_relations <= 26

    def check_max_atoms(self, max_atoms: int) -> bool:
        """max_atoms must be at least 1"""
        return max_atoms >= 1

    def check_max_extra_variables(self, max_extra_variables: int) -> bool:
        """max_extra_variables must be non-negative"""
        return max_extra_variables >= 0

    def check_constant_pool(self, constant_pool: int) -> bool:
        """constant_pool must be at least 1"""
        return constant_pool >= 1

    def check_repair_cap(self, repair_cap: int) -> bool:
        """repair_cap must be at least 1"""
        return repair_cap >= 1

    def check_jobs(self, jobs: int) -> bool:
        """jobs must be at least 1"""
        return jobs >= 1
