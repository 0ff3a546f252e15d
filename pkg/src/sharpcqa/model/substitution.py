from collections.abc import Iterator, Mapping
from typing import Optional, TypeVar

from .atoms import Atom
from .terms import Term, Variable

AtomT = TypeVar("AtomT", bound=Atom)


class Substitution(Mapping[Variable, Term]):
    """An immutable mapping from variables to terms, the identity on everything else"""

    __slots__ = ("_mapping", "_hash")

    def __init__(self, mapping: Optional[Mapping[Variable, Term]] = None) -> None:
        self._mapping: dict[Variable, Term] = {v: t for v, t in (mapping or {}).items() if v != t}
        self._hash: Optional[int] = None

    @classmethod
    def identity(cls) -> "Substitution":
        """The empty substitution"""
        return cls()

    def __getitem__(self, variable: Variable) -> Term:
        return self._mapping[variable]

    def __iter__(self) -> Iterator[Variable]:
        return iter(self._mapping)

    def __len__(self) -> int:
        return len(self._mapping)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Substitution):
            return self._mapping == other._mapping
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._mapping.items()))
        return self._hash

    def __repr__(self) -> str:
        pairs = ", ".join(f"{v}->{t}" for v, t in sorted(self._mapping.items(), key=lambda p: str(p[0])))
        return f"Substitution({{{pairs}}})"

    def apply_term(self, term: Term) -> Term:
        """Applies this substitution to a single term"""
        if isinstance(term, Variable):
            return self._mapping.get(term, term)
        return term

    def apply_atom(self, atom: AtomT) -> AtomT:
        """Applies this substitution positionwise to an atom"""
        return atom.with_terms(
            (self.apply_term(t) for t in atom.key),
            (self.apply_term(t) for t in atom.nonkey),
        )  # type: ignore[return-value]

    def compose(self, first: "Substitution") -> "Substitution":
        """The substitution `self ∘ first`, i.e. `first` is applied before `self`"""
        mapping: dict[Variable, Term] = {v: self.apply_term(t) for v, t in first.items()}
        for v, t in self.items():
            mapping.setdefault(v, t)
        return Substitution(mapping)

    @property
    def is_permutation(self) -> bool:
        """Whether this substitution permutes the variables it moves"""
        images = list(self.values())
        return all(isinstance(t, Variable) for t in images) and set(images) == set(self.keys())

    def inverse(self) -> "Substitution":
        """The inverse of a permutation of variables.

        Raises:
            ValueError: if this substitution is not a permutation.
        """
        if not self.is_permutation:
            raise ValueError(f"{self} is not invertible")
        return Substitution({t: v for v, t in self.items()})  # type: ignore[misc]
