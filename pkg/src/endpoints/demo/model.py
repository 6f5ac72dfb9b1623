from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Iterable, Optional, Union

from ..codecs import JsonCodec

__all__ = ["Item", "item_codec", "item_list_codec", "ItemsRepository"]


@dataclass(frozen=True)
class Item:
    id: str
    name: str
    quantity: int

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("item id must be a non-empty string")
        if not isinstance(self.name, str):
            raise ValueError("item name must be a string")
        if not isinstance(self.quantity, int) or isinstance(self.quantity, bool) or self.quantity < 0:
            raise ValueError("item quantity must be a non-negative integer")

    def to_json(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_json(cls, data: Any) -> "Item":
        if not isinstance(data, dict) or set(data) != {"id", "name", "quantity"}:
            raise ValueError(f"not an item object: {data!r}")
        return cls(data["id"], data["name"], data["quantity"])


def _encode_item(item: Item) -> str:
    if not isinstance(item, Item):
        raise TypeError(f"expected Item, got {type(item).__name__}")
    return json.dumps(item.to_json(), ensure_ascii=False)


def _decode_item(text: str) -> Item:
    return Item.from_json(json.loads(text))


def _encode_items(items: list[Item]) -> str:
    if not isinstance(items, list) or not all(isinstance(i, Item) for i in items):
        raise TypeError("expected a list of Item")
    return json.dumps([i.to_json() for i in items], ensure_ascii=False)


def _decode_items(text: str) -> list[Item]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of items")
    return [Item.from_json(entry) for entry in data]


item_codec: JsonCodec[Item] = JsonCodec(_encode_item, _decode_item)
item_list_codec: JsonCodec[list[Item]] = JsonCodec(_encode_items, _decode_items)


class ItemsRepository:
    """Thread-safe in-memory store, optionally mirrored to a JSON file.

    The file holds a JSON array of items; it is read once at construction
    and rewritten atomically after every mutation.
    """

    PAGE_SIZE = 50

    def __init__(self, items: Iterable[Item] = (), path: Optional[Union[str, os.PathLike]] = None) -> None:
        self._lock = threading.Lock()
        self._items: dict[str, Item] = {}
        self.path = Path(path) if path is not None else None
        if self.path is not None and self.path.exists():
            for item in _decode_items(self.path.read_text(encoding="utf-8")):
                self._items[item.id] = item
        for item in items:
            self._items[item.id] = item

    def lookup(self, item_id: str) -> Optional[Item]:
        with self._lock:
            return self._items.get(item_id)

    def store(self, item: Item) -> Item:
        with self._lock:
            self._items[item.id] = item
            self._persist()
        return item

    def page(self, number: Optional[int] = None) -> list[Item]:
        number = 1 if number is None else number
        if number < 1:
            return []
        start = (number - 1) * self.PAGE_SIZE
        with self._lock:
            ordered = [self._items[k] for k in sorted(self._items)]
        return ordered[start : start + self.PAGE_SIZE]

    def snapshot(self) -> dict[str, Item]:
        with self._lock:
            return dict(self._items)

    def _persist(self) -> None:
        if self.path is None:
            return
        payload = _encode_items([self._items[k] for k in sorted(self._items)])
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, self.path)
