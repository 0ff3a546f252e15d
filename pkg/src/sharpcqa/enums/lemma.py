from enum import Enum


class Lemma(Enum):
    """The reductions checked by the verification harness

    Attributes
        COUPLE: #CQA(q') reduces to #CQA(q) for a minimal q and its self-join-free rewrite q'.
        PADDING: #CQA(q) reduces to #CQA(N-encoding of q).
    """

    COUPLE = 1
    PADDING = 2

    def __str__(self) -> str:
        return f"lemma {self.value}"
