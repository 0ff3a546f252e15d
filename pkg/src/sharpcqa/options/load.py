import json
import os
from typing import Any, Union

from yacs.config import CfgNode

from ..sharpcqa_core.exceptions import InvalidOptionsError


def check_version(cls: Any, d: dict) -> None:
    """Pops the `version` entry of `d` and compares it with `cls.__version__`.

    Data written before the format was versioned is read as version 1.0.

    Raises:
        InvalidOptionsError: if the versions differ.
    """
    expected = getattr(cls, "__version__", None)
    if expected is None:
        return
    found = str(d.pop("version", "1.0"))
    if found != expected:
        raise InvalidOptionsError(f"{cls.__name__} reads format version {expected}, but the data has version {found}")


def read_path_or_literal(path_or_literal: str) -> str:
    """The content of the file at `path_or_literal` if it exists, otherwise `path_or_literal` itself"""
    if os.path.isfile(path_or_literal):
        with open(path_or_literal, encoding="utf-8") as f:
            return f.read()
    return path_or_literal


def load_json_or_yaml(path_or_literal: str) -> Union[dict, CfgNode]:
    """Reads a JSON or YAML mapping from a file path or from literal text.

    JSON is tried first; YAML is read through yacs.

    Args:
        path_or_literal (str): the path to a `*.json` or `*.yaml` file, or the content of such a file.

    Raises:
        InvalidOptionsError: if the content is not a mapping.

    Returns:
        Union[dict, CfgNode]: the loaded mapping.
    """
    text = read_path_or_literal(path_or_literal)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = CfgNode.load_cfg(text)
    if not isinstance(data, (dict, CfgNode)):
        raise InvalidOptionsError(f"Expected a mapping of options, but read {data!r}")
    return data
