"""Plain HTTP message values exchanged by interpreters and transports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Protocol

__all__ = ["Headers", "HttpRequest", "HttpResponse", "Transport", "header"]

Headers = tuple[tuple[str, str], ...]


def header(headers: Headers, name: str) -> Optional[str]:
    """Return the first value of header ``name`` (case-insensitive) or None."""
    wanted = name.lower()
    for key, value in headers:
        if key.lower() == wanted:
            return value
    return None


@dataclass(frozen=True)
class HttpRequest:
    method: str
    target: str
    headers: Headers = ()
    body: bytes = b""

    def __post_init__(self) -> None:
        if not self.target.startswith("/"):
            raise ValueError(f"request target must start with '/': {self.target!r}")
        object.__setattr__(self, "headers", tuple(tuple(h) for h in self.headers))

    def header(self, name: str) -> Optional[str]:
        return header(self.headers, name)


@dataclass(frozen=True)
class HttpResponse:
    status: int
    headers: Headers = field(default=())
    body: bytes = b""

    def __post_init__(self) -> None:
        if not 100 <= self.status <= 599:
            raise ValueError(f"status out of range: {self.status}")
        object.__setattr__(self, "headers", tuple(tuple(h) for h in self.headers))

    def header(self, name: str) -> Optional[str]:
        return header(self.headers, name)


class Transport(Protocol):
    """Anything able to deliver a request and eventually return the response.

    Implementations raise ``OSError`` (or :class:`~endpoints.client.TransportFailure`)
    when delivery fails, and must tolerate concurrent calls.
    """

    async def send(self, request: HttpRequest) -> HttpResponse: ...
