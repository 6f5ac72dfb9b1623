"""The items service, described once.

Every other part of the demo (server, client, OpenAPI document) interprets
:class:`ItemsApi`; nothing here knows which interpreter it will meet.
"""

from __future__ import annotations

from functools import cached_property
from typing import Any

from .. import client, codecs, server
from ..docs import algebra, forward, openapi
from ..http import Transport
from .model import Item, ItemsRepository, item_codec, item_list_codec

TITLE = "Items API"
VERSION = "1.0.0"


class ItemsApi(algebra.JsonEntities):
    @cached_property
    def items_path(self) -> Any:
        return self.path("items")

    @cached_property
    def get_item(self) -> Any:
        return self.endpoint(
            self.get(self.url(self.path("item", self.segment(codecs.text, "id")))),
            self.json_response(item_codec, documentation="The item identified by 'id'"),
            summary="Get an item",
        )

    @cached_property
    def create_item(self) -> Any:
        return self.endpoint(
            self.post(self.url(self.items_path), self.json_request(item_codec)),
            self.json_response(item_codec, documentation="The stored item"),
            summary="Create or replace an item",
        )

    @cached_property
    def list_items(self) -> Any:
        return self.endpoint(
            self.get(self.url(self.items_path, self.query_param("page", codecs.integer, required=False))),
            self.json_response(item_list_codec, documentation="One page of items ordered by id"),
            summary="List items",
        )

    def all_endpoints(self) -> list[Any]:
        return [self.get_item, self.create_item, self.list_items]


class ItemsDocs(ItemsApi, openapi.JsonEntities):
    pass


class ItemsClient(ItemsApi, forward.JsonEntities):
    def __init__(self, transport: Transport) -> None:
        super().__init__(client.JsonEntities(transport))


class ItemsServer(ItemsApi, forward.JsonEntities):
    def __init__(self) -> None:
        super().__init__(server.JsonEntities())

    def router(self, repository: ItemsRepository) -> server.Router:
        def lookup(item_id: str) -> Item:
            item = repository.lookup(item_id)
            if item is None:
                raise server.Abort(404)
            return item

        return server.Router(
            [
                self.get_item.implemented_by(lookup),
                self.create_item.implemented_by(repository.store),
                self.list_items.implemented_by(repository.page),
            ]
        )


def openapi_document() -> openapi.OpenApiDocument:
    return openapi.generate_openapi(TITLE, VERSION, ItemsDocs().all_endpoints())
