"""Contract-testing tools: check that client and server agree on a description.

:class:`InMemoryTransport` hands client-encoded requests straight to a
server :class:`~endpoints.server.Router`. :func:`round_trip` binds a
description on both sides and checks that a value survives the trip in
both directions. :class:`RandomDescription` generates bounded random
descriptions (with matching random values) covering every constructor.
"""

from __future__ import annotations

import asyncio
import random
import string
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from . import authorization, client, server
from .algebra import UNIT
from .codecs import INT64_MAX, INT64_MIN, integer, text
from .demo.model import Item, item_codec
from .http import HttpRequest, HttpResponse

__all__ = [
    "ClientStack",
    "ServerStack",
    "InMemoryTransport",
    "in_memory_transport",
    "Verdict",
    "round_trip",
    "round_trip_endpoints",
    "RandomDescription",
    "random_text",
    "random_item",
]


class ClientStack(authorization.ClientAuthorization, client.JsonEntities):
    """Client interpreter for every built-in unit."""


class ServerStack(authorization.ServerAuthorization, server.JsonEntities):
    """Server interpreter for every built-in unit."""


class InMemoryTransport:
    def __init__(self, router: server.Router) -> None:
        self.router = router

    async def send(self, request: HttpRequest) -> HttpResponse:
        return await self.router(request)


def in_memory_transport(router: server.Router) -> InMemoryTransport:
    return InMemoryTransport(router)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a round trip; ``stage`` names where the two sides diverged."""

    ok: bool
    stage: Optional[str] = None  # "encode" | "match" | "handler" | "decode"
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


async def round_trip_endpoints(
    client_endpoint: client.ClientEndpoint, server_endpoint: server.ServerEndpoint, value: Any, result: Any
) -> Verdict:
    try:
        message = client_endpoint.encode(value)
    except Exception as exc:
        return Verdict(False, "encode", repr(exc))
    matched = server_endpoint.request.decode(message)
    if not isinstance(matched, server.Matched) or matched.info != value:
        return Verdict(False, "match", f"{message!r} decoded to {matched!r}, expected {value!r}")

    received: list[Any] = []

    async def handler(info: Any) -> Any:
        received.append(info)
        return result

    router = server.Router([server_endpoint.implemented_by_async(handler)])
    try:
        decoded = await client_endpoint.invoke(value, InMemoryTransport(router))
    except client.InvocationError as exc:
        return Verdict(False, "decode", f"{exc.kind}: {exc}")
    if received != [value]:
        return Verdict(False, "handler", f"handler received {received!r}, expected [{value!r}]")
    if decoded != result:
        return Verdict(False, "decode", f"client decoded {decoded!r}, expected {result!r}")
    return Verdict(True)


def round_trip(describe: Callable[[Any], Any], value: Any, result: Any) -> Verdict:
    """Interpret ``describe`` with both full stacks and run a single round trip.

    ``describe`` takes an interpreter and returns an endpoint built with it.
    Must not be called from a running event loop; use
    :func:`round_trip_endpoints` there.
    """
    return asyncio.run(round_trip_endpoints(describe(ClientStack()), describe(ServerStack()), value, result))


_ALPHABET = string.ascii_letters + string.digits + " -._~!$&'()*+,;=:@/?#[]%\"<>\\^`{|}" + "éß漢字😀 \t\n\x00\x7f"


def random_text(rng: random.Random, min_size: int = 1, max_size: int = 12) -> str:
    """Text mixing unreserved, reserved, control and non-ASCII characters."""
    size = rng.randint(min_size, max_size)
    chars = []
    for _ in range(size):
        if rng.random() < 0.15:
            code = rng.randint(0, 0x10FFFF)
            while 0xD800 <= code <= 0xDFFF:
                code = rng.randint(0, 0x10FFFF)
            chars.append(chr(code))
        else:
            chars.append(rng.choice(_ALPHABET))
    return "".join(chars)


def random_integer(rng: random.Random) -> int:
    return rng.choice([0, -1, 1, INT64_MIN, INT64_MAX, rng.randint(-1000, 1000), rng.randint(INT64_MIN, INT64_MAX)])


def random_item(rng: random.Random) -> Item:
    return Item(random_text(rng), random_text(rng, min_size=0), rng.randint(0, 2**40))


def _nest(values: list[Any]) -> Any:
    """Left-nested pairing with unit absorption, written independently of Combination."""
    if not values:
        return UNIT
    nested = values[0]
    for value in values[1:]:
        nested = (nested, value)
    return nested


_CODECS = {"text": text, "integer": integer}
_RESPONSES = ("empty", "item", "authorized-empty", "authorized-item")


@dataclass(frozen=True)
class RandomDescription:
    """A bounded random endpoint description.

    At most 5 path segments and 3 query parameters; the entity is empty or a
    JSON item; the response is empty or a JSON item, optionally authorized.
    """

    segments: tuple[tuple[str, str], ...]  # ("static", literal) | ("dynamic", codec name)
    params: tuple[tuple[str, str, bool], ...]  # (name, codec name, required)
    method: str
    entity: str  # "empty" | "item"
    response: str
    summary: str = field(default="", compare=False)

    @classmethod
    def generate(cls, rng: random.Random) -> "RandomDescription":
        segments = []
        for _ in range(rng.randint(0, 5)):
            if rng.random() < 0.5:
                literal = random_text(rng, min_size=0, max_size=6).replace("/", "")
                segments.append(("static", literal))
            else:
                segments.append(("dynamic", rng.choice(sorted(_CODECS))))
        names: set[str] = set()
        params = []
        for _ in range(rng.randint(0, 3)):
            name = random_text(rng, max_size=5)
            if name in names:
                continue
            names.add(name)
            params.append((name, rng.choice(sorted(_CODECS)), rng.random() < 0.5))
        method = rng.choice(["GET", "POST"])
        entity = "empty" if method == "GET" else rng.choice(["empty", "item"])
        return cls(tuple(segments), tuple(params), method, entity, rng.choice(_RESPONSES))

    def build(self, alg: Any) -> Any:
        """Construct the described endpoint with interpreter ``alg``."""
        parts: list[Any] = []
        for kind, arg in self.segments:
            parts.append(alg.static_segment(arg) if kind == "static" else alg.segment(_CODECS[arg]))
        params = [alg.query_param(name, _CODECS[codec], required) for name, codec, required in self.params]
        url = alg.url(alg.path(*parts), alg.query(*params))
        if self.method == "GET":
            request = alg.get(url)
        else:
            entity = alg.json_request(item_codec) if self.entity == "item" else alg.empty_entity()
            request = alg.post(url, entity)
        response = alg.json_response(item_codec) if self.response.endswith("item") else alg.empty_response()
        if self.response.startswith("authorized"):
            response = alg.authorized(response)
        return alg.endpoint(request, response)

    def _value_for(self, codec: str, rng: random.Random) -> Any:
        return random_text(rng) if codec == "text" else random_integer(rng)

    def random_request(self, rng: random.Random) -> Any:
        """A random well-typed request info value, in the expected nesting."""
        path = [self._value_for(arg, rng) for kind, arg in self.segments if kind == "dynamic"]
        query = []
        for _, codec, required in self.params:
            value = self._value_for(codec, rng)
            query.append(value if required or rng.random() < 0.5 else None)
        url_parts = [_nest(fragment) for fragment in (path, query) if fragment]
        request_parts = [_nest(url_parts)] if url_parts else []
        if self.entity == "item":
            request_parts.append(random_item(rng))
        return _nest(request_parts)

    def random_response(self, rng: random.Random) -> Any:
        inner = random_item(rng) if self.response.endswith("item") else UNIT
        if self.response.startswith("authorized") and rng.random() < 0.5:
            return None
        return inner
