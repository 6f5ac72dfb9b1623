"""Server interpreter: descriptions become request matchers and response encoders.

A request carrying info ``A`` is a function from an incoming
:class:`~endpoints.http.HttpRequest` to a :class:`MatchResult`. Matching is
two-phase: the method and path decide whether the request is ours at all,
and only then are query parameters and the entity decoded.

Endpoints are bound to business logic with
:meth:`ServerEndpoint.implemented_by_async`, producing a :class:`Route`;
a :class:`Router` dispatches to the first matching route.
"""

from __future__ import annotations

import inspect
import logging
from dataclasses import dataclass
from typing import Any, Awaitable, Callable, Generic, Optional, Sequence, TypeVar, Union

from . import algebra, urlcoding
from .algebra import UNIT, Combination, Method
from .codecs import DecodeError, JsonCodec, SegmentCodec
from .http import HttpRequest, HttpResponse

__all__ = [
    "Abort",
    "NotMatched",
    "Malformed",
    "Matched",
    "MatchResult",
    "PathMatch",
    "Path",
    "Query",
    "Url",
    "Entity",
    "Request",
    "Response",
    "ServerEndpoint",
    "Route",
    "Router",
    "Endpoints",
    "JsonEntities",
    "match_path",
    "decode_request",
    "encode_response",
    "route",
]

log = logging.getLogger(__name__)

A = TypeVar("A")
B = TypeVar("B")

JSON_CONTENT_TYPE = "application/json"


class Abort(Exception):
    """Raised by a handler to answer with ``status`` and an empty body.

    Any other exception escaping a handler becomes a 500.
    """

    def __init__(self, status: int) -> None:
        if not 400 <= status <= 599:
            raise ValueError(f"abort status must be 4xx or 5xx: {status}")
        super().__init__(f"aborted with {status}")
        self.status = status


@dataclass(frozen=True)
class NotMatched:
    """The request is not for this endpoint.

    ``path_hit`` is set when the path matched but the method did not.
    """

    path_hit: bool = False


@dataclass(frozen=True)
class Malformed:
    detail: str
    locus: str  # "path-segment" | "query" | "entity"


@dataclass(frozen=True)
class Matched(Generic[A]):
    info: A


MatchResult = Union[NotMatched, Malformed, Matched]


@dataclass(frozen=True)
class PathMatch:
    """A structural path match.

    ``failure`` holds the first segment decode error; the literal structure
    still matched so the caller can answer 400 rather than 404.
    """

    info: Any
    remaining: list[str]
    failure: Optional[str] = None


@dataclass(frozen=True)
class Path:
    match: Callable[[list[str]], Optional[PathMatch]]
    unit: bool


@dataclass(frozen=True)
class Query:
    """``decode`` takes raw (still encoded) pairs and raises DecodeError."""

    decode: Callable[[list[tuple[str, str]]], Any]
    unit: bool


@dataclass(frozen=True)
class Url:
    path: Path
    query: Query
    combination: Combination

    @property
    def unit(self) -> bool:
        return self.combination.unit


@dataclass(frozen=True)
class Entity:
    decode: Callable[[HttpRequest], Any]
    unit: bool


@dataclass(frozen=True)
class Request(Generic[A]):
    method: Method
    url: Url
    entity: Entity
    combination: Combination

    def decode(self, message: HttpRequest) -> MatchResult:
        segments, pairs = urlcoding.split_target(message.target)
        hit = _full_match(self.url.path, segments)
        if hit is None:
            return NotMatched()
        if message.method != self.method.value:
            return NotMatched(path_hit=True)
        if hit.failure is not None:
            return Malformed(hit.failure, "path-segment")
        try:
            query_info = self.url.query.decode(pairs)
        except DecodeError as exc:
            return Malformed(str(exc), "query")
        try:
            entity_info = self.entity.decode(message)
        except DecodeError as exc:
            return Malformed(str(exc), "entity")
        url_info = self.url.combination.join(hit.info, query_info)
        return Matched(self.combination.join(url_info, entity_info))


def _full_match(path: Path, segments: list[str]) -> Optional[PathMatch]:
    hit = path.match(segments)
    if hit is None:
        return None
    # "/" is both zero segments and one empty segment.
    if hit.remaining and not (hit.remaining == [""] and len(segments) == 1):
        return None
    return hit


@dataclass(frozen=True)
class Response(Generic[B]):
    encode: Callable[[B], HttpResponse]


Handler = Callable[[A], Awaitable[B]]


class Route:
    """An endpoint bound to its business logic."""

    def __init__(self, request: Request, response: Response, handler: Callable[[Any], Any]) -> None:
        self.request = request
        self.response = response
        self.handler = handler

    @property
    def method(self) -> str:
        return self.request.method.value

    def match(self, message: HttpRequest) -> MatchResult:
        return self.request.decode(message)

    async def respond(self, info: Any) -> HttpResponse:
        try:
            result = self.handler(info)
            if inspect.isawaitable(result):
                result = await result
            return self.response.encode(result)
        except Abort as abort:
            return HttpResponse(abort.status)
        except Exception:
            log.exception("handler for %s failed", self.method)
            return HttpResponse(500)

    async def handle(self, message: HttpRequest) -> Optional[HttpResponse]:
        """Respond if this route matches ``message``; None otherwise."""
        result = self.match(message)
        if isinstance(result, Matched):
            return await self.respond(result.info)
        if isinstance(result, Malformed):
            return _bad_request(result)
        return None


def _bad_request(result: Malformed) -> HttpResponse:
    body = f"malformed {result.locus}: {result.detail}".encode("utf-8")
    return HttpResponse(400, (("content-type", "text/plain; charset=utf-8"),), body)


class Router:
    """First-match dispatch over an ordered list of routes.

    The earliest route that matches wins. Failing that, a route whose path
    and method matched but whose input did not decode gives 400; a path
    matched only under other methods gives 405 with an ``allow`` header;
    anything else is 404.
    """

    def __init__(self, routes: Sequence[Route]) -> None:
        self.routes = tuple(routes)

    async def __call__(self, message: HttpRequest) -> HttpResponse:
        malformed: Optional[Malformed] = None
        allowed: set[str] = set()
        for candidate in self.routes:
            result = candidate.match(message)
            if isinstance(result, Matched):
                return await candidate.respond(result.info)
            if isinstance(result, Malformed):
                malformed = malformed or result
            elif result.path_hit:
                allowed.add(candidate.method)
        if malformed is not None:
            return _bad_request(malformed)
        if allowed:
            return HttpResponse(405, (("allow", ", ".join(sorted(allowed))),))
        return HttpResponse(404)


class ServerEndpoint(Generic[A, B]):
    def __init__(self, request: Request[A], response: Response[B]) -> None:
        self.request = request
        self.response = response

    def implemented_by_async(self, handler: Handler) -> Route:
        return Route(self.request, self.response, handler)

    def implemented_by(self, fn: Callable[[A], B]) -> Route:
        async def handler(info: A) -> B:
            return fn(info)

        return Route(self.request, self.response, handler)


def _decode_segment(codec: SegmentCodec, raw: str) -> Any:
    return codec.decode(urlcoding.decode(raw))


def _no_entity(_: HttpRequest) -> Any:
    return UNIT


class Endpoints(algebra.Endpoints):
    """Server interpretation of :class:`endpoints.algebra.Endpoints`."""

    def static_segment(self, literal: str) -> Path:
        algebra.check_segment_literal(literal)

        def match(segments: list[str]) -> Optional[PathMatch]:
            if not segments:
                return None
            try:
                if urlcoding.decode(segments[0]) != literal:
                    return None
            except ValueError:
                return None
            return PathMatch(UNIT, segments[1:])

        return Path(match, unit=True)

    def segment(self, codec: SegmentCodec) -> Path:
        def match(segments: list[str]) -> Optional[PathMatch]:
            if not segments:
                return None
            try:
                return PathMatch(_decode_segment(codec, segments[0]), segments[1:])
            except ValueError as exc:
                if segments[0] == "":
                    # no trailing-slash leniency: an empty segment is a miss, not a 400
                    return None
                return PathMatch(None, segments[1:], f"segment {segments[0]!r}: {exc}")

        return Path(match, unit=False)

    def chain_path(self, first: Path, second: Path) -> Path:
        combination = Combination(first.unit, second.unit)

        def match(segments: list[str]) -> Optional[PathMatch]:
            head = first.match(segments)
            if head is None:
                return None
            tail = second.match(head.remaining)
            if tail is None:
                return None
            return PathMatch(
                combination.join(head.info, tail.info),
                tail.remaining,
                head.failure or tail.failure,
            )

        return Path(match, combination.unit)

    def root(self) -> Path:
        return Path(lambda segments: PathMatch(UNIT, segments), unit=True)

    def query_param(self, name: str, codec: SegmentCodec, required: bool = True) -> Query:
        algebra.check_query_name(name)

        def decode(pairs: list[tuple[str, str]]) -> Any:
            for raw_name, raw_value in pairs:
                try:
                    if urlcoding.decode(raw_name) != name:
                        continue
                except ValueError:
                    continue
                try:
                    return _decode_segment(codec, raw_value)
                except ValueError as exc:
                    raise DecodeError(f"query parameter {name!r}: {exc}") from exc
            if required:
                raise DecodeError(f"missing required query parameter {name!r}")
            return None

        return Query(decode, unit=False)

    def chain_query(self, first: Query, second: Query) -> Query:
        combination = Combination(first.unit, second.unit)
        return Query(
            lambda pairs: combination.join(first.decode(pairs), second.decode(pairs)),
            combination.unit,
        )

    def empty_query(self) -> Query:
        return Query(lambda _: UNIT, unit=True)

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
        return Response(lambda _: HttpResponse(200))

    def endpoint(self, request: Request, response: Response) -> ServerEndpoint:
        return ServerEndpoint(request, response)


class JsonEntities(Endpoints, algebra.JsonEntities):
    def json_request(self, codec: JsonCodec) -> Entity:
        def decode(message: HttpRequest) -> Any:
            try:
                return codec.decode(message.body.decode("utf-8"))
            except Exception as exc:
                raise DecodeError(f"invalid JSON entity: {type(exc).__name__}: {exc}") from exc

        return Entity(decode, unit=False)

    def json_response(self, codec: JsonCodec) -> Response:
        def encode(value: Any) -> HttpResponse:
            body = codec.encode(value).encode("utf-8")
            return HttpResponse(200, (("content-type", JSON_CONTENT_TYPE),), body)

        return Response(encode)


def match_path(path: Path, raw_segments: list[str]) -> Optional[tuple[Any, list[str]]]:
    """Return ``(info, remaining)`` or None; a segment decode failure also gives None."""
    hit = path.match(list(raw_segments))
    if hit is None or hit.failure is not None:
        return None
    return hit.info, hit.remaining


def decode_request(request: Request[A], message: HttpRequest) -> MatchResult:
    return request.decode(message)


def encode_response(response: Response[B], value: B) -> HttpResponse:
    return response.encode(value)


def route(routes: Sequence[Route]) -> Router:
    return Router(routes)
