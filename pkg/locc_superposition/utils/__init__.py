"""
Serialization utilities
"""

from .fast_json import dumps, dumps_bytes, loads, to_jsonable, JSONDecodeError, HAS_ORJSON

__all__ = ['dumps', 'dumps_bytes', 'loads', 'to_jsonable', 'JSONDecodeError', 'HAS_ORJSON']
