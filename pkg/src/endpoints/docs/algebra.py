"""Documented language units.

Same constructors as :mod:`endpoints.algebra`, plus the metadata a reader of
the generated documentation needs: segment names, response descriptions and
an optional endpoint summary. Descriptions written against these units can
be documented with :mod:`endpoints.docs.openapi` and still served or invoked
through :mod:`endpoints.docs.forward`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Optional

from ..algebra import PathSyntax
from ..codecs import JsonCodec, SegmentCodec

__all__ = ["Endpoints", "JsonEntities", "check_segment_name"]


def check_segment_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise ValueError("documented path segment needs a non-empty name")


class Endpoints(PathSyntax, ABC):
    @abstractmethod
    def static_segment(self, literal: str) -> Any: ...

    @abstractmethod
    def segment(self, codec: SegmentCodec, name: str) -> Any: ...

    @abstractmethod
    def chain_path(self, first: Any, second: Any) -> Any: ...

    @abstractmethod
    def root(self) -> Any: ...

    @abstractmethod
    def query_param(self, name: str, codec: SegmentCodec, required: bool = True) -> Any: ...

    @abstractmethod
    def chain_query(self, first: Any, second: Any) -> Any: ...

    @abstractmethod
    def empty_query(self) -> Any: ...

    @abstractmethod
    def url(self, path: Any, query: Any = None) -> Any: ...

    @abstractmethod
    def get(self, url: Any) -> Any: ...

    @abstractmethod
    def post(self, url: Any, entity: Any) -> Any: ...

    @abstractmethod
    def empty_entity(self) -> Any: ...

    @abstractmethod
    def empty_response(self, documentation: str = "") -> Any: ...

    @abstractmethod
    def endpoint(self, request: Any, response: Any, summary: Optional[str] = None) -> Any: ...


class JsonEntities(Endpoints):
    @abstractmethod
    def json_request(self, codec: JsonCodec) -> Any: ...

    @abstractmethod
    def json_response(self, codec: JsonCodec, documentation: str) -> Any: ...
