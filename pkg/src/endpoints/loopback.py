"""Real HTTP/1.1 over loopback: a client transport and an ASGI adapter for routers."""

from __future__ import annotations

import asyncio
import http.client
import logging
import socket
from typing import Any, Awaitable, Callable
from urllib.parse import urlsplit

from .client import TransportFailure
from .http import HttpRequest, HttpResponse
from .server import Router

__all__ = ["HttpTransport", "RouterApp", "bind_socket", "serve"]

log = logging.getLogger(__name__)


class HttpTransport:
    """Sends each request on a fresh ``http.client`` connection.

    The request target is written to the wire verbatim. Blocking I/O runs
    in a worker thread so concurrent ``send`` calls proceed in parallel.
    """

    def __init__(self, base_url: str, timeout: float = 10.0) -> None:
        parts = urlsplit(base_url)
        if parts.scheme != "http" or not parts.hostname:
            raise ValueError(f"expected an http:// base URL, got {base_url!r}")
        self.host = parts.hostname
        self.port = parts.port or 80
        self.prefix = parts.path.rstrip("/")
        self.timeout = timeout

    def _send(self, request: HttpRequest) -> HttpResponse:
        conn = http.client.HTTPConnection(self.host, self.port, timeout=self.timeout)
        try:
            conn.request(request.method, self.prefix + request.target, body=request.body, headers=dict(request.headers))
            reply = conn.getresponse()
            return HttpResponse(reply.status, tuple(reply.getheaders()), reply.read())
        except (OSError, http.client.HTTPException) as exc:
            raise TransportFailure(f"{type(exc).__name__}: {exc}") from exc
        finally:
            conn.close()

    async def send(self, request: HttpRequest) -> HttpResponse:
        return await asyncio.to_thread(self._send, request)


Receive = Callable[[], Awaitable[dict[str, Any]]]
Send = Callable[[dict[str, Any]], Awaitable[None]]


class RouterApp:
    """ASGI application answering every HTTP request with ``router``."""

    def __init__(self, router: Router) -> None:
        self.router = router

    async def __call__(self, scope: dict[str, Any], receive: Receive, send: Send) -> None:
        if scope["type"] == "lifespan":
            while True:
                event = await receive()
                if event["type"] == "lifespan.startup":
                    await send({"type": "lifespan.startup.complete"})
                elif event["type"] == "lifespan.shutdown":
                    await send({"type": "lifespan.shutdown.complete"})
                    return
        if scope["type"] != "http":
            return
        body = b""
        while True:
            event = await receive()
            body += event.get("body", b"")
            if not event.get("more_body"):
                break
        raw_path = scope.get("raw_path") or scope["path"].encode("utf-8")
        target = raw_path.decode("latin-1")
        if scope.get("query_string"):
            target += "?" + scope["query_string"].decode("latin-1")
        headers = tuple((k.decode("latin-1"), v.decode("latin-1")) for k, v in scope["headers"])
        try:
            request = HttpRequest(scope["method"], target, headers, body)
        except ValueError:
            response = HttpResponse(400)
        else:
            response = await self.router(request)
        await send(
            {
                "type": "http.response.start",
                "status": response.status,
                "headers": [(k.encode("latin-1"), v.encode("latin-1")) for k, v in response.headers],
            }
        )
        await send({"type": "http.response.body", "body": response.body})


def bind_socket(host: str = "127.0.0.1", port: int = 0) -> socket.socket:
    """Bind a listening socket; raises OSError if the port is taken."""
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        sock.bind((host, port))
    except OSError:
        sock.close()
        raise
    sock.listen(128)
    return sock


def serve(router: Router, sock: socket.socket, log_level: str = "warning") -> None:
    """Serve ``router`` on an already bound socket until interrupted."""
    import uvicorn

    config = uvicorn.Config(RouterApp(router), log_level=log_level, lifespan="off", access_log=False)
    uvicorn.Server(config).run(sockets=[sock])
