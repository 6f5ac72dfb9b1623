"""Forwarding interpreters: run documented descriptions on any base interpreter.

Each constructor drops the documentation metadata and delegates to the
``receiver``, so the carriers produced are the receiver's own::

    class DocClient(ItemsDocs, forward.Endpoints, forward.JsonEntities):
        pass

    api = DocClient(ClientStack(transport))
    item = await api.get_item("abc123")

Every forwarding unit declares which base unit its receiver must implement
(``receiver_unit``); construction fails with TypeError when it does not.
"""

from __future__ import annotations

from typing import Any, Optional

from .. import algebra
from ..codecs import JsonCodec, SegmentCodec
from . import algebra as doc_algebra

__all__ = ["Endpoints", "JsonEntities"]


class Endpoints(doc_algebra.Endpoints):
    receiver_unit: type = algebra.Endpoints

    def __init__(self, receiver: Any) -> None:
        required = {
            cls.__dict__["receiver_unit"] for cls in type(self).__mro__ if "receiver_unit" in cls.__dict__
        }
        missing = sorted(unit.__qualname__ for unit in required if not isinstance(receiver, unit))
        if missing:
            raise TypeError(f"receiver {type(receiver).__name__} does not implement: {', '.join(missing)}")
        self.receiver = receiver

    def static_segment(self, literal: str) -> Any:
        return self.receiver.static_segment(literal)

    def segment(self, codec: SegmentCodec, name: str) -> Any:
        doc_algebra.check_segment_name(name)
        return self.receiver.segment(codec)

    def chain_path(self, first: Any, second: Any) -> Any:
        return self.receiver.chain_path(first, second)

    def root(self) -> Any:
        return self.receiver.root()

    def query_param(self, name: str, codec: SegmentCodec, required: bool = True) -> Any:
        return self.receiver.query_param(name, codec, required)

    def chain_query(self, first: Any, second: Any) -> Any:
        return self.receiver.chain_query(first, second)

    def empty_query(self) -> Any:
        return self.receiver.empty_query()

    def url(self, path: Any, query: Any = None) -> Any:
        return self.receiver.url(path, query)

    def get(self, url: Any) -> Any:
        return self.receiver.get(url)

    def post(self, url: Any, entity: Any) -> Any:
        return self.receiver.post(url, entity)

    def empty_entity(self) -> Any:
        return self.receiver.empty_entity()

    def empty_response(self, documentation: str = "") -> Any:
        return self.receiver.empty_response()

    def endpoint(self, request: Any, response: Any, summary: Optional[str] = None) -> Any:
        return self.receiver.endpoint(request, response)


class JsonEntities(Endpoints, doc_algebra.JsonEntities):
    receiver_unit = algebra.JsonEntities

    def json_request(self, codec: JsonCodec) -> Any:
        return self.receiver.json_request(codec)

    def json_response(self, codec: JsonCodec, documentation: str) -> Any:
        return self.receiver.json_response(codec)
