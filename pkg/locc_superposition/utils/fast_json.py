"""
Fast JSON utility module with orjson optimization

Serializes verdicts, regions and sweep reports with orjson when available,
falling back to standard json otherwise. Exact rationals are rendered as
"p/q" strings so they never degrade to decimals.
"""

try:
    import orjson
    HAS_ORJSON = True
except ImportError:
    import json
    HAS_ORJSON = False

import dataclasses
import logging
from enum import Enum
from fractions import Fraction
from typing import Any, Union

import numpy as np
from pydantic import BaseModel

from ..core.numbers import format_number


logger = logging.getLogger(__name__)

if not HAS_ORJSON:
    logger.debug("orjson not available, falling back to standard json")


def to_jsonable(value: Any) -> Any:
    """
    Convert domain values into JSON-ready Python structures.

    Dataclasses become dicts, enums their values, Fractions "p/q" strings,
    tuples lists and numpy scalars plain numbers.
    """
    if isinstance(value, Fraction):
        return format_number(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


def _default(obj: Any) -> Any:
    converted = to_jsonable(obj)
    if converted is obj:
        raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")
    return converted


def dumps(obj: Any, indent: bool = False) -> str:
    """
    Fast JSON serialization with orjson optimization.

    Args:
        obj: Object to serialize
        indent: Pretty-print with two-space indentation

    Returns:
        JSON string
    """
    if HAS_ORJSON:
        option = orjson.OPT_SERIALIZE_NUMPY
        if indent:
            option |= orjson.OPT_INDENT_2
        return orjson.dumps(obj, default=_default, option=option).decode('utf-8')
    return json.dumps(obj, default=_default, indent=2 if indent else None)


def loads(s: Union[str, bytes]) -> Any:
    """
    Fast JSON deserialization with orjson optimization.

    Args:
        s: JSON string or bytes to deserialize

    Returns:
        Parsed object
    """
    if HAS_ORJSON:
        if isinstance(s, str):
            s = s.encode('utf-8')
        return orjson.loads(s)
    if isinstance(s, bytes):
        s = s.decode('utf-8')
    return json.loads(s)


def dumps_bytes(obj: Any, indent: bool = False) -> bytes:
    """JSON serialization returning bytes (orjson native format)"""
    return dumps(obj, indent=indent).encode('utf-8')


if HAS_ORJSON:
    JSONDecodeError = orjson.JSONDecodeError
else:
    JSONDecodeError = json.JSONDecodeError


__all__ = ['dumps', 'loads', 'dumps_bytes', 'to_jsonable', 'JSONDecodeError', 'HAS_ORJSON']
