"""Base language units: the abstract vocabulary for describing endpoints.

A language unit is an abstract class whose methods construct or combine
protocol concepts (paths, query strings, URLs, request entities, requests,
responses, endpoints). It says nothing about what those concepts *are*;
interpreters subclass a unit and give every constructor a concrete meaning.

Descriptions are written against the abstract units, usually as a mixin::

    class ItemsApi(algebra.Endpoints, algebra.JsonEntities):
        @cached_property
        def get_item(self):
            return self.endpoint(
                self.get(self.url(self.path("item", self.segment(codecs.text)))),
                self.json_response(item_codec),
            )

and then mixed with an interpreter stack, e.g.
``class Client(ItemsApi, client.Endpoints, client.JsonEntities)``.
A plain function ``lambda alg: alg.endpoint(...)`` works just as well.

Info carried by chained fragments combines as left-nested pairs, with
fragments that carry nothing (``UNIT``) absorbed. See :class:`Combination`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any

from .codecs import JsonCodec, SegmentCodec

__all__ = [
    "UNIT",
    "Method",
    "Combination",
    "PathSyntax",
    "Endpoints",
    "JsonEntities",
    "check_segment_literal",
    "check_query_name",
]

UNIT: tuple[()] = ()


class Method(str, Enum):
    GET = "GET"
    POST = "POST"
    PUT = "PUT"
    DELETE = "DELETE"


class Combination:
    """Pairs the info of two chained fragments.

    If one side carries no info it is absorbed and the other side's value is
    used unchanged; otherwise the combined info is the pair ``(left, right)``.
    Chaining ``a, b, c`` therefore yields ``((a, b), c)``.
    """

    __slots__ = ("left_unit", "right_unit")

    def __init__(self, left_unit: bool, right_unit: bool) -> None:
        self.left_unit = left_unit
        self.right_unit = right_unit

    @property
    def unit(self) -> bool:
        return self.left_unit and self.right_unit

    def join(self, left: Any, right: Any) -> Any:
        if self.left_unit:
            return right
        if self.right_unit:
            return left
        return (left, right)

    def split(self, value: Any) -> tuple[Any, Any]:
        if self.left_unit:
            return UNIT, value
        if self.right_unit:
            return value, UNIT
        if not isinstance(value, tuple) or len(value) != 2:
            raise TypeError(f"expected a pair, got {value!r}")
        return value

    def __repr__(self) -> str:
        return f"Combination(left_unit={self.left_unit}, right_unit={self.right_unit})"


def check_segment_literal(literal: str) -> None:
    if not isinstance(literal, str):
        raise TypeError("path literal must be a str")
    if "/" in literal:
        raise ValueError(f"path literal may not contain '/': {literal!r}")


def check_query_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise ValueError("query parameter name must be a non-empty str")


class PathSyntax:
    """Shorthands built purely from the primitive constructors."""

    def path(self, *parts: Any) -> Any:
        """Chain ``parts`` onto :meth:`root`; plain strings become static segments."""
        result = self.root()
        for part in parts:
            if isinstance(part, str):
                part = self.static_segment(part)
            result = self.chain_path(result, part)
        return result

    def query(self, *params: Any) -> Any:
        result = self.empty_query()
        for param in params:
            result = self.chain_query(result, param)
        return result


class Endpoints(PathSyntax, ABC):
    """URL, request, response and endpoint vocabulary."""

    @abstractmethod
    def static_segment(self, literal: str) -> Any:
        """A path segment matching exactly ``literal``; carries no info."""

    @abstractmethod
    def segment(self, codec: SegmentCodec) -> Any:
        """One path segment carrying a value converted by ``codec``."""

    @abstractmethod
    def chain_path(self, first: Any, second: Any) -> Any: ...

    @abstractmethod
    def root(self) -> Any:
        """The empty path; carries no info."""

    @abstractmethod
    def query_param(self, name: str, codec: SegmentCodec, required: bool = True) -> Any:
        """A query parameter. Optional parameters carry ``None`` when absent."""

    @abstractmethod
    def chain_query(self, first: Any, second: Any) -> Any: ...

    @abstractmethod
    def empty_query(self) -> Any: ...

    @abstractmethod
    def url(self, path: Any, query: Any = None) -> Any:
        """Combine a path and an (optional) query string."""

    @abstractmethod
    def get(self, url: Any) -> Any: ...

    @abstractmethod
    def post(self, url: Any, entity: Any) -> Any: ...

    @abstractmethod
    def empty_entity(self) -> Any: ...

    @abstractmethod
    def empty_response(self) -> Any: ...

    @abstractmethod
    def endpoint(self, request: Any, response: Any) -> Any: ...


class JsonEntities(Endpoints):
    """Request and response entities encoded as JSON by a user codec."""

    @abstractmethod
    def json_request(self, codec: JsonCodec) -> Any: ...

    @abstractmethod
    def json_response(self, codec: JsonCodec) -> Any: ...
