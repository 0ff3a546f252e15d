from enum import Enum


class Connectivity(Enum):
    """How two atoms of a query are considered connected in its intersection graph

    Attributes
        PATH: joined by a path in the intersection graph.
        ADJACENT: joined by an edge of the intersection graph.
    """

    PATH = "path"
    ADJACENT = "adjacent"

    def __str__(self) -> str:
        return self.value
