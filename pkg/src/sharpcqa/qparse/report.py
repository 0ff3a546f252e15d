from typing import Optional

from pydantic import BaseModel, Field


# pylint:disable=too-few-public-methods
class TraceEntry(BaseModel):
    """Represents one step of a classification trace.

    Attributes:
        step (str): The name of the pipeline step.
        result (str): The canonical serialization of the step's output.
    """

    step: str
    result: str


class ClassificationReport(BaseModel):
    """Represents the JSON form of a classification.

    Attributes:
        verdict (str): One of "fp", "sharp-p-hard" or "trivially-zero".
        trace (list[TraceEntry]): The pipeline steps in execution order.
        query (str): The classified query.
        encoded_query (Optional[str]): The encoded minimal query, absent for trivially-zero verdicts.
        witness (Optional[list[str]]): The two atoms witnessing hardness, absent unless the verdict is hard.
    """

    verdict: str
    trace: list[TraceEntry] = Field(default_factory=list)
    query: str
    encoded_query: Optional[str] = Field(default=None)
    witness: Optional[list[str]] = Field(default=None)
