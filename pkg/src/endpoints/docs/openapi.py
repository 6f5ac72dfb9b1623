"""OpenAPI interpreter for the documented language units.

Carriers here are plain documentation data: no values flow through them.
:func:`generate_openapi` groups documented endpoints into an
:class:`OpenApiDocument` and :func:`serialize_openapi` renders it as
deterministic OpenAPI 3.0.3 JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional, Union

from .. import urlcoding
from ..algebra import Method, check_query_name, check_segment_literal
from ..codecs import JsonCodec, SegmentCodec
from . import algebra as doc_algebra

__all__ = [
    "OPENAPI_VERSION",
    "DocumentedSegment",
    "QueryParameter",
    "DocumentedResponse",
    "DocUrl",
    "DocEntity",
    "DocRequest",
    "DocResponse",
    "DocumentedEndpoint",
    "OpenApiDocument",
    "Endpoints",
    "JsonEntities",
    "generate_openapi",
    "serialize_openapi",
]

OPENAPI_VERSION = "3.0.3"
JSON_CONTENT_TYPE = "application/json"


@dataclass(frozen=True)
class DocumentedSegment:
    name: str
    kind: str


@dataclass(frozen=True)
class QueryParameter:
    name: str
    kind: str
    required: bool


@dataclass(frozen=True)
class DocumentedResponse:
    status: int
    description: str
    content_type: Optional[str] = None

    def __post_init__(self) -> None:
        if not 100 <= self.status <= 599:
            raise ValueError(f"status out of range: {self.status}")


PathPart = Union[str, DocumentedSegment]


@dataclass(frozen=True)
class DocPath:
    parts: tuple[PathPart, ...]


@dataclass(frozen=True)
class DocQuery:
    params: tuple[QueryParameter, ...]


@dataclass(frozen=True)
class DocUrl:
    path: DocPath
    query: DocQuery


@dataclass(frozen=True)
class DocEntity:
    content_type: Optional[str] = None


@dataclass(frozen=True)
class DocRequest:
    method: Method
    url: DocUrl
    entity: DocEntity


@dataclass(frozen=True)
class DocResponse:
    responses: tuple[DocumentedResponse, ...]


@dataclass(frozen=True)
class DocumentedEndpoint:
    method: Method
    path_template: tuple[PathPart, ...]
    query_parameters: tuple[QueryParameter, ...] = ()
    request_content_type: Optional[str] = None
    responses: tuple[DocumentedResponse, ...] = ()
    summary: Optional[str] = None

    def __post_init__(self) -> None:
        names = [p.name for p in self.path_template if isinstance(p, DocumentedSegment)]
        names += [q.name for q in self.query_parameters]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"duplicate parameter names: {', '.join(duplicates)}")
        if not self.responses:
            raise ValueError("a documented endpoint needs at least one response")

    @property
    def template(self) -> str:
        rendered = [
            "{" + part.name + "}" if isinstance(part, DocumentedSegment) else urlcoding.encode(part)
            for part in self.path_template
        ]
        return "/" + "/".join(rendered)

    def operation(self) -> dict[str, Any]:
        op: dict[str, Any] = {}
        if self.summary is not None:
            op["summary"] = self.summary
        parameters = [
            _parameter(part.name, "path", True, part.kind)
            for part in self.path_template
            if isinstance(part, DocumentedSegment)
        ]
        parameters += [_parameter(q.name, "query", q.required, q.kind) for q in self.query_parameters]
        op["parameters"] = parameters
        if self.request_content_type is not None:
            op["requestBody"] = {
                "required": True,
                "content": {self.request_content_type: {"schema": {}}},
            }
        responses: dict[str, Any] = {}
        for response in self.responses:
            entry: dict[str, Any] = {"description": response.description}
            if response.content_type is not None:
                entry["content"] = {response.content_type: {"schema": {}}}
            responses[str(response.status)] = entry
        op["responses"] = responses
        return op


def _parameter(name: str, location: str, required: bool, kind: str) -> dict[str, Any]:
    return {"name": name, "in": location, "required": required, "schema": {"type": kind}}


@dataclass
class OpenApiDocument:
    title: str
    version: str
    paths: dict[str, dict[str, dict[str, Any]]] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "openapi": OPENAPI_VERSION,
            "info": {"title": self.title, "version": self.version},
            "paths": {template: self.paths[template] for template in sorted(self.paths)},
        }


class Endpoints(doc_algebra.Endpoints):
    def static_segment(self, literal: str) -> DocPath:
        check_segment_literal(literal)
        return DocPath((literal,))

    def segment(self, codec: SegmentCodec, name: str) -> DocPath:
        doc_algebra.check_segment_name(name)
        return DocPath((DocumentedSegment(name, codec.kind),))

    def chain_path(self, first: DocPath, second: DocPath) -> DocPath:
        return DocPath(first.parts + second.parts)

    def root(self) -> DocPath:
        return DocPath(())

    def query_param(self, name: str, codec: SegmentCodec, required: bool = True) -> DocQuery:
        check_query_name(name)
        return DocQuery((QueryParameter(name, codec.kind, required),))

    def chain_query(self, first: DocQuery, second: DocQuery) -> DocQuery:
        return DocQuery(first.params + second.params)

    def empty_query(self) -> DocQuery:
        return DocQuery(())

    def url(self, path: DocPath, query: Optional[DocQuery] = None) -> DocUrl:
        return DocUrl(path, query if query is not None else DocQuery(()))

    def get(self, url: DocUrl) -> DocRequest:
        return DocRequest(Method.GET, url, DocEntity())

    def post(self, url: DocUrl, entity: DocEntity) -> DocRequest:
        return DocRequest(Method.POST, url, entity)

    def empty_entity(self) -> DocEntity:
        return DocEntity()

    def empty_response(self, documentation: str = "") -> DocResponse:
        return DocResponse((DocumentedResponse(200, documentation),))

    def endpoint(self, request: DocRequest, response: DocResponse, summary: Optional[str] = None) -> DocumentedEndpoint:
        return DocumentedEndpoint(
            method=request.method,
            path_template=request.url.path.parts,
            query_parameters=request.url.query.params,
            request_content_type=request.entity.content_type,
            responses=response.responses,
            summary=summary,
        )


class JsonEntities(Endpoints, doc_algebra.JsonEntities):
    def json_request(self, codec: JsonCodec) -> DocEntity:
        return DocEntity(JSON_CONTENT_TYPE)

    def json_response(self, codec: JsonCodec, documentation: str) -> DocResponse:
        return DocResponse((DocumentedResponse(200, documentation, JSON_CONTENT_TYPE),))


def generate_openapi(title: str, version: str, endpoints: Iterable[DocumentedEndpoint]) -> OpenApiDocument:
    """Group ``endpoints`` by path template; raises ValueError on a (template, method) collision."""
    doc = OpenApiDocument(title, version)
    for endpoint in endpoints:
        operations = doc.paths.setdefault(endpoint.template, {})
        method = endpoint.method.value.lower()
        if method in operations:
            raise ValueError(f"duplicate operation: {endpoint.method.value} {endpoint.template}")
        operations[method] = endpoint.operation()
    return doc


def serialize_openapi(doc: OpenApiDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False)
