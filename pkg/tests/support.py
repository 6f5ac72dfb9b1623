"""Undocumented items descriptions and interpreter stacks shared by tests."""

from functools import cached_property

from endpoints import algebra, client, codecs, server
from endpoints.demo.model import Item, item_codec


def describe_get_item(alg):
    return alg.endpoint(
        alg.get(alg.url(alg.path("item", alg.segment(codecs.text)))),
        alg.json_response(item_codec),
    )


class PlainItems(algebra.JsonEntities):
    @cached_property
    def get_item(self):
        return describe_get_item(self)

    @cached_property
    def create_item(self):
        return self.endpoint(
            self.post(self.url(self.path("items")), self.json_request(item_codec)),
            self.json_response(item_codec),
        )

    @cached_property
    def count(self):
        return self.endpoint(
            self.get(self.url(self.path("item", self.segment(codecs.integer)))),
            self.empty_response(),
        )

    @cached_property
    def ping(self):
        return self.endpoint(self.get(self.url(self.root())), self.empty_response())


class PlainClient(PlainItems, client.JsonEntities):
    pass


class PlainServer(PlainItems, server.JsonEntities):
    pass


ITEM = Item("abc123", "Widget", 3)


class StubTransport:
    def __init__(self, response):
        self.response = response
        self.sent = []

    async def send(self, request):
        self.sent.append(request)
        return self.response
