from types import NoneType
from typing import Any, Union, get_args, get_origin


def generic_isinstance(obj: Any, type_hint: Any) -> bool:
    """`isinstance` that also understands `Optional[T]`, `Union[...]`, `list[T]` and `tuple[T, ...]`"""
    if isinstance(type_hint, tuple):
        return any(generic_isinstance(obj, t) for t in type_hint)
    origin = get_origin(type_hint)
    if origin is None:
        # bool is an int subclass, but an int option never accepts True
        if type_hint is int and isinstance(obj, bool):
            return False
        return isinstance(obj, type_hint)
    args = get_args(type_hint)
    if origin is Union:
        return any(generic_isinstance(obj, t) for t in args)
    if origin in (list, tuple):
        return isinstance(obj, origin) and all(generic_isinstance(item, args[0]) for item in obj)
    raise NotImplementedError(f"generic_isinstance does not support {type_hint}")


def is_optional(type_hint: Any) -> bool:
    """Whether `type_hint` is `Optional[T]` for a single T"""
    args = get_args(type_hint)
    return get_origin(type_hint) is Union and len(args) == 2 and NoneType in args


def unwrap_optional(type_hint: Any) -> Any:
    """T for `Optional[T]`, `type_hint` itself otherwise"""
    if not is_optional(type_hint):
        return type_hint
    return next(arg for arg in get_args(type_hint) if arg is not NoneType)
