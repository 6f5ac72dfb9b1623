"""Percent-encoding shared by URL rendering (client) and URL matching (server).

Every byte of the UTF-8 encoding outside the RFC 3986 unreserved set
(``ALPHA / DIGIT / "-" / "." / "_" / "~"``) is written as ``%HH`` with
uppercase hex digits. The same rule applies to path segments, query names
and query values, so a space is always ``%20`` and never ``+``.
"""

from __future__ import annotations

from urllib.parse import quote, unquote_to_bytes

__all__ = ["encode", "decode", "split_target"]


def encode(text: str) -> str:
    return quote(text, safe="", encoding="utf-8", errors="strict")


def decode(raw: str) -> str:
    """Percent-decode ``raw``; raises ``ValueError`` if the bytes are not UTF-8.

    ``+`` is kept literally. Stray ``%`` not followed by two hex digits is
    kept as is.
    """
    try:
        return unquote_to_bytes(raw).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ValueError(f"invalid percent-encoded UTF-8 in {raw!r}") from exc


def split_target(target: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Split a request target into raw path segments and raw query pairs.

    Segments and pairs are returned still percent-encoded. ``"/"`` yields
    ``[""]``; ``"/item/"`` yields ``["item", ""]``.
    """
    path, _, query = target.partition("?")
    segments = path[1:].split("/") if path.startswith("/") else path.split("/")
    pairs: list[tuple[str, str]] = []
    if query:
        for chunk in query.split("&"):
            if not chunk:
                continue
            name, _, value = chunk.partition("=")
            pairs.append((name, value))
    return segments, pairs
