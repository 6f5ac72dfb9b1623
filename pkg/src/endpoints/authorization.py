"""A user-level language unit: responses that may be withheld.

``authorized(response)`` wraps a response carrying ``B`` into one carrying
``Optional[B]``: ``None`` means the server refused (403, empty body), any
other value is encoded exactly as the wrapped response would encode it.

The unit and its interpreters only use the public carriers of the client,
server and documentation interpreters; it is the template for adding new
vocabulary without touching the library.
"""

from __future__ import annotations

from abc import abstractmethod
from typing import Any

from . import algebra, client, server
from .docs import algebra as doc_algebra
from .docs import forward, openapi
from .http import HttpResponse

__all__ = [
    "FORBIDDEN",
    "Authorization",
    "DocAuthorization",
    "ClientAuthorization",
    "ServerAuthorization",
    "OpenApiAuthorization",
    "ForwardAuthorization",
]

FORBIDDEN = 403


class Authorization(algebra.Endpoints):
    @abstractmethod
    def authorized(self, response: Any) -> Any:
        """A response carrying ``Optional[B]``; ``None`` when access is refused."""


class DocAuthorization(doc_algebra.Endpoints):
    @abstractmethod
    def authorized(self, response: Any, documentation: str = "Forbidden") -> Any: ...


class ClientAuthorization(Authorization, client.Endpoints):
    def authorized(self, response: client.Response) -> client.Response:
        def decode(message: HttpResponse) -> Any:
            if message.status == FORBIDDEN:
                return None
            return response.decode(message)

        return client.Response(decode)


class ServerAuthorization(Authorization, server.Endpoints):
    def authorized(self, response: server.Response) -> server.Response:
        def encode(value: Any) -> HttpResponse:
            if value is None:
                return HttpResponse(FORBIDDEN)
            return response.encode(value)

        return server.Response(encode)


class OpenApiAuthorization(DocAuthorization, openapi.Endpoints):
    def authorized(self, response: openapi.DocResponse, documentation: str = "Forbidden") -> openapi.DocResponse:
        return openapi.DocResponse(response.responses + (openapi.DocumentedResponse(FORBIDDEN, documentation),))


class ForwardAuthorization(DocAuthorization, forward.Endpoints):
    receiver_unit = Authorization

    def authorized(self, response: Any, documentation: str = "Forbidden") -> Any:
        return self.receiver.authorized(response)
