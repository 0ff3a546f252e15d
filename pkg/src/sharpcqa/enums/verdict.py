from enum import Enum


class Verdict(Enum):
    """The outcome of classifying #CQA(q)

    Attributes
        FP: #CQA(q) is computable in polynomial time.
        SHARP_P_HARD: #CQA(q) is #P-hard.
        TRIVIALLY_ZERO: no consistent database satisfies q, so every count is 0.
    """

    FP = "fp"
    SHARP_P_HARD = "sharp-p-hard"
    TRIVIALLY_ZERO = "trivially-zero"

    @property
    def display_name(self) -> str:
        """The name printed by the command-line interface"""
        return {
            "fp": "FP",
            "sharp-p-hard": "SharpPHard",
            "trivially-zero": "TriviallyZero",
        }[self.value]

    @property
    def complexity(self) -> str:
        """The complexity class in conventional notation"""
        return {
            "fp": "FP",
            "sharp-p-hard": "#P-hard",
            "trivially-zero": "FP (constant 0)",
        }[self.value]

    def __repr__(self) -> str:
        return self.display_name

    def __str__(self) -> str:
        return self.display_name
