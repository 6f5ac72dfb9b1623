"""Value codecs used by the vocabulary: segment/query codecs and JSON codecs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

__all__ = [
    "DecodeError",
    "SegmentCodec",
    "JsonCodec",
    "text",
    "integer",
]

A = TypeVar("A")

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_DECIMAL = re.compile(r"-?[0-9]+")


class DecodeError(ValueError):
    """Raised by a codec when raw input does not denote a valid value."""


@dataclass(frozen=True)
class SegmentCodec(Generic[A]):
    """Converts between values and *unescaped* segment or query-value text.

    ``kind`` names the value shape for documentation (``"string"`` or
    ``"integer"`` in OpenAPI terms). ``encode`` must raise ``TypeError`` for
    values of the wrong type.
    """

    kind: str
    encode: Callable[[A], str]
    decode: Callable[[str], A]


@dataclass(frozen=True)
class JsonCodec(Generic[A]):
    """User-supplied conversion between values and JSON text."""

    encode: Callable[[A], str]
    decode: Callable[[str], A]


def _encode_text(value: Any) -> str:
    if not isinstance(value, str):
        raise TypeError(f"text codec expects str, got {type(value).__name__}")
    return value


def _decode_text(raw: str) -> str:
    if raw == "":
        raise DecodeError("empty text")
    return raw


def _encode_integer(value: Any) -> str:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"integer codec expects int, got {type(value).__name__}")
    if not INT64_MIN <= value <= INT64_MAX:
        raise ValueError(f"integer {value} outside the signed 64-bit range")
    return str(value)


def _decode_integer(raw: str) -> int:
    if not _DECIMAL.fullmatch(raw):
        raise DecodeError(f"not a decimal integer: {raw!r}")
    value = int(raw)
    if not INT64_MIN <= value <= INT64_MAX:
        raise DecodeError(f"integer overflow: {raw!r}")
    return value


text: SegmentCodec[str] = SegmentCodec("string", _encode_text, _decode_text)
integer: SegmentCodec[int] = SegmentCodec("integer", _encode_integer, _decode_integer)
