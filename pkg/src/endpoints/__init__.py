"""Describe HTTP endpoints once; interpret them as client, server and OpenAPI document.

Modules:

- :mod:`endpoints.algebra` -- the base vocabulary (abstract language units)
- :mod:`endpoints.client`, :mod:`endpoints.server` -- interpreters
- :mod:`endpoints.docs` -- documented vocabulary, OpenAPI and forwarding interpreters
- :mod:`endpoints.authorization` -- an add-on unit built from public parts only
- :mod:`endpoints.harness` -- in-memory transport and round-trip checks
- :mod:`endpoints.loopback` -- real HTTP transport and ASGI adapter
"""

from .algebra import UNIT, Method
from .codecs import DecodeError, JsonCodec, SegmentCodec, integer, text
from .http import HttpRequest, HttpResponse, Transport

__all__ = [
    "UNIT",
    "Method",
    "DecodeError",
    "JsonCodec",
    "SegmentCodec",
    "integer",
    "text",
    "HttpRequest",
    "HttpResponse",
    "Transport",
]
