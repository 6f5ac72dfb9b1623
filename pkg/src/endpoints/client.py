"""Client interpreter: descriptions become request builders and response decoders.

A request carrying info ``A`` is a function from ``A`` to an outgoing
:class:`~endpoints.http.HttpRequest`; a response carrying ``B`` is a function
from an incoming :class:`~endpoints.http.HttpResponse` to ``B``. An endpoint
is an awaitable callable::

    class Client(ItemsApi, client.Endpoints, client.JsonEntities):
        pass

    item = await Client(transport).get_item("abc123")
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, TypeVar

from . import algebra, urlcoding
from .algebra import UNIT, Combination, Method
from .codecs import JsonCodec, SegmentCodec
from .http import HttpRequest, HttpResponse, Transport

__all__ = [
    "InvocationError",
    "TransportFailure",
    "UnexpectedStatus",
    "DecodeFailure",
    "Path",
    "Query",
    "Url",
    "Entity",
    "Request",
    "Response",
    "ClientEndpoint",
    "Endpoints",
    "JsonEntities",
    "render_url",
    "encode_request",
    "decode_response",
    "invoke",
]

A = TypeVar("A")
B = TypeVar("B")

JSON_CONTENT_TYPE = "application/json"


class InvocationError(Exception):
    kind = "invocation-error"


class TransportFailure(InvocationError):
    kind = "transport-failure"


class UnexpectedStatus(InvocationError):
    kind = "unexpected-status"

    def __init__(self, status: int, body_prefix: str = "") -> None:
        super().__init__(f"unexpected status {status}")
        self.status = status
        self.body_prefix = body_prefix

    @classmethod
    def of(cls, response: HttpResponse) -> "UnexpectedStatus":
        return cls(response.status, response.body[:200].decode("utf-8", "replace"))


class DecodeFailure(InvocationError):
    kind = "decode-failure"

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


@dataclass(frozen=True)
class Path:
    render: Callable[[Any], list[str]]
    unit: bool


@dataclass(frozen=True)
class Query:
    render: Callable[[Any], list[tuple[str, str]]]
    unit: bool


@dataclass(frozen=True)
class Url(Generic[A]):
    path: Path
    query: Query
    combination: Combination

    @property
    def unit(self) -> bool:
        return self.combination.unit

    def render(self, info: A) -> str:
        path_info, query_info = self.combination.split(info)
        target = "/" + "/".join(self.path.render(path_info))
        pairs = self.query.render(query_info)
        if pairs:
            target += "?" + "&".join(f"{name}={value}" for name, value in pairs)
        return target


@dataclass(frozen=True)
class Entity:
    encode: Callable[[Any], tuple[tuple[tuple[str, str], ...], bytes]]
    unit: bool


@dataclass(frozen=True)
class Request(Generic[A]):
    method: Method
    url: Url
    entity: Entity
    combination: Combination

    def encode(self, info: A) -> HttpRequest:
        url_info, entity_info = self.combination.split(info)
        headers, body = self.entity.encode(entity_info)
        return HttpRequest(self.method.value, self.url.render(url_info), headers, body)


@dataclass(frozen=True)
class Response(Generic[B]):
    """``decode`` raises :class:`InvocationError` for unacceptable responses."""

    decode: Callable[[HttpResponse], B]


class ClientEndpoint(Generic[A, B]):
    def __init__(self, request: Request[A], response: Response[B], transport: Optional[Transport] = None) -> None:
        self.request = request
        self.response = response
        self.transport = transport

    def encode(self, info: A) -> HttpRequest:
        return self.request.encode(info)

    async def invoke(self, info: A, transport: Optional[Transport] = None) -> B:
        transport = transport or self.transport
        if transport is None:
            raise ValueError("no transport given and the interpreter has no default")
        message = self.request.encode(info)
        try:
            reply = await transport.send(message)
        except InvocationError:
            raise
        except OSError as exc:
            raise TransportFailure(str(exc) or type(exc).__name__) from exc
        return self.response.decode(reply)

    async def __call__(self, info: A) -> B:
        return await self.invoke(info)


def _percent_segments(codec: SegmentCodec) -> Callable[[Any], list[str]]:
    return lambda value: [urlcoding.encode(codec.encode(value))]


def _no_entity(_: Any) -> tuple[tuple[tuple[str, str], ...], bytes]:
    return (), b""


def _decode_empty(response: HttpResponse) -> Any:
    if response.status != 200:
        raise UnexpectedStatus.of(response)
    return UNIT


def _json_decoder(codec: JsonCodec) -> Callable[[HttpResponse], Any]:
    def decode(response: HttpResponse) -> Any:
        if response.status != 200:
            raise UnexpectedStatus.of(response)
        try:
            return codec.decode(response.body.decode("utf-8"))
        except Exception as exc:
            raise DecodeFailure(f"{type(exc).__name__}: {exc}") from exc

    return decode


class Endpoints(algebra.Endpoints):
    """Client interpretation of :class:`endpoints.algebra.Endpoints`."""

    def __init__(self, transport: Optional[Transport] = None) -> None:
        self.transport = transport

    def static_segment(self, literal: str) -> Path:
        algebra.check_segment_literal(literal)
        encoded = urlcoding.encode(literal)
        return Path(lambda _: [encoded], unit=True)

    def segment(self, codec: SegmentCodec) -> Path:
        return Path(_percent_segments(codec), unit=False)

    def chain_path(self, first: Path, second: Path) -> Path:
        combination = Combination(first.unit, second.unit)

        def render(info: Any) -> list[str]:
            left, right = combination.split(info)
            return first.render(left) + second.render(right)

        return Path(render, combination.unit)

    def root(self) -> Path:
        return Path(lambda _: [], unit=True)

    def query_param(self, name: str, codec: SegmentCodec, required: bool = True) -> Query:
        algebra.check_query_name(name)
        encoded_name = urlcoding.encode(name)

        def render(value: Any) -> list[tuple[str, str]]:
            if value is None and not required:
                return []
            return [(encoded_name, urlcoding.encode(codec.encode(value)))]

        return Query(render, unit=False)

    def chain_query(self, first: Query, second: Query) -> Query:
        combination = Combination(first.unit, second.unit)

        def render(info: Any) -> list[tuple[str, str]]:
            left, right = combination.split(info)
            return first.render(left) + second.render(right)

        return Query(render, combination.unit)

    def empty_query(self) -> Query:
        return Query(lambda _: [], unit=True)

    def url(self, path: Path, query: Optional[Query] = None) -> Url:
        query = query if query is not None else self.empty_query()
        return Url(path, query, Combination(path.unit, query.unit))

    def get(self, url: Url) -> Request:
        entity = self.empty_entity()
        return Request(Method.GET, url, entity, Combination(url.unit, entity.unit))

    def post(self, url: Url, entity: Entity) -> Request:
        return Request(Method.POST, url, entity, Combination(url.unit, entity.unit))

    def empty_entity(self) -> Entity:
        return Entity(_no_entity, unit=True)

    def empty_response(self) -> Response:
        return Response(_decode_empty)

    def endpoint(self, request: Request, response: Response) -> ClientEndpoint:
        return ClientEndpoint(request, response, self.transport)


class JsonEntities(Endpoints, algebra.JsonEntities):
    def json_request(self, codec: JsonCodec) -> Entity:
        def encode(value: Any) -> tuple[tuple[tuple[str, str], ...], bytes]:
            return (("content-type", JSON_CONTENT_TYPE),), codec.encode(value).encode("utf-8")

        return Entity(encode, unit=False)

    def json_response(self, codec: JsonCodec) -> Response:
        return Response(_json_decoder(codec))


def render_url(url: Url[A], info: A) -> str:
    return url.render(info)


def encode_request(request: Request[A], info: A) -> HttpRequest:
    return request.encode(info)


def decode_response(response: Response[B], message: HttpResponse) -> B:
    return response.decode(message)


async def invoke(endpoint: ClientEndpoint[A, B], info: A, transport: Transport) -> B:
    return await endpoint.invoke(info, transport)
