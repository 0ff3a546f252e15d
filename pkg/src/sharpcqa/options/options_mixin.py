import inspect
from dataclasses import MISSING, fields, is_dataclass
from enum import Enum
from typing import Any, Union, get_args, get_origin, get_type_hints

from typing_extensions import Self
from yacs.config import CfgNode

from ..sharpcqa_core.exceptions import InvalidOptionsError
from ..sharpcqa_core.logger import log
from .generic_type_checking import generic_isinstance, is_optional, unwrap_optional
from .load import check_version, load_json_or_yaml


class OptionsMixin:
    """Mixin for option dataclasses: values are converted and type checked on every assignment, and a
    method `check_<field>` (if any) must accept the new value.

    Supported field types are bool, int, float and str, subclasses of `enum.Enum`, and `Optional[T]` or
    `tuple[T, ...]` of those.
    """

    @classmethod
    def annotations(cls) -> dict[str, Any]:
        """The resolved type hints of all fields, including those of OptionsMixin base classes"""
        hints: dict[str, Any] = {}
        for base in reversed(cls.__mro__):
            if base is not OptionsMixin and issubclass(base, OptionsMixin):
                hints.update(get_type_hints(base))
        return hints

    @classmethod
    def load(cls, d: Union[CfgNode, dict, str]) -> Self:
        """Builds options from a mapping, from JSON or YAML text, or from the path to a JSON or YAML file.

        Keys missing from the data take the field defaults; unknown keys are ignored with a warning.

        Raises:
            InvalidOptionsError: if a required key is missing, the format version differs or a value is rejected.

        Returns:
            Self: the loaded options.
        """
        if isinstance(d, str):
            d = load_json_or_yaml(d)
        if not isinstance(d, dict):
            raise InvalidOptionsError(f"{cls.__name__} cannot be loaded from {d!r}")
        if not is_dataclass(cls):
            raise TypeError(f"{cls.__name__} must be decorated with dataclass")
        d = dict(d)
        check_version(cls, d)

        known = {f.name for f in fields(cls)}
        for key in sorted(set(d) - known):
            log.warning(f"Ignoring unknown option {key} for {cls.__name__}")

        kwargs = {}
        for f in fields(cls):
            if f.name in d:
                kwargs[f.name] = cls._deserialize(d[f.name], cls.annotations()[f.name])
            elif f.default is MISSING and f.default_factory is MISSING:
                raise InvalidOptionsError(f"Missing required option {f.name} for {cls.__name__}")
        return cls(**kwargs)

    def __setattr__(self, name: str, value: Any) -> None:
        """Converts, type checks and value checks `value` before assigning it.

        Raises:
            KeyError: if `name` is not a field.
            InvalidOptionsError: if the value has the wrong type or `check_<name>` rejects it. The message
                includes the docstring of the checker.
        """
        hints = type(self).annotations()
        if name not in hints:
            raise KeyError(f"No such option in {type(self).__name__}: {name}")
        field_type = hints[name]
        value = self._deserialize(value, field_type)
        if not generic_isinstance(value, field_type):
            raise InvalidOptionsError(
                f"{type(self).__name__}.{name} expects a value of type {field_type}, but got {value!r}"
            )
        checker = getattr(self, f"check_{name}", None)
        if checker is not None and inspect.ismethod(checker) and not checker(value):
            message = f"Invalid value {value!r} for {name} of {type(self).__name__}"
            if checker.__doc__:
                message += f": {checker.__doc__.strip()}"
            raise InvalidOptionsError(message)
        super().__setattr__(name, value)

    @property
    def json(self) -> dict:
        """The options as a builtin dictionary, versioned when the class declares `__version__`"""
        d: dict[str, Any] = {}
        if version := getattr(self, "__version__", None):
            d["version"] = version
        for f in fields(self):  # type: ignore[arg-type]
            d[f.name] = self._serialize(getattr(self, f.name))
        return d

    @property
    def config(self) -> CfgNode:
        """The options as a yacs CfgNode, ready for `config.dump()` into a YAML file"""
        return CfgNode(init_dict=self.json)

    @classmethod
    def _deserialize(cls, x: Any, t: Any) -> Any:
        if generic_isinstance(x, t):
            return x
        if is_optional(t):
            return None if x is None else cls._deserialize(x, unwrap_optional(t))
        if get_origin(t) is tuple and isinstance(x, (list, tuple)):
            return tuple(cls._deserialize(item, get_args(t)[0]) for item in x)
        if isinstance(t, type) and issubclass(t, Enum):
            return cls._deserialize_enum(x, t)
        if t in (bool, int, float, str):
            try:
                return t(x)
            except (TypeError, ValueError) as e:
                raise InvalidOptionsError(f"Cannot read {x!r} as {t.__name__}") from e
        raise TypeError(f"Unsupported option type {t} in {cls.__name__}")

    @staticmethod
    def _deserialize_enum(x: Any, t: type[Enum]) -> Enum:
        try:
            if isinstance(x, str) and x.isdigit():
                return t(int(x))
            return t[x] if isinstance(x, str) else t(x)
        except (KeyError, ValueError) as e:
            choices = ", ".join(member.name for member in t)
            raise InvalidOptionsError(f"{x!r} is not one of {choices}") from e

    @classmethod
    def _serialize(cls, x: Any) -> Any:
        if isinstance(x, Enum):
            return x.name
        if isinstance(x, tuple):
            return [cls._serialize(item) for item in x]
        return x
