"""Command-line front end for the items demo.

Exit codes: 0 success, 1 runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from typing import Optional, Sequence

from .. import client, loopback
from ..docs.openapi import serialize_openapi
from .api import ItemsClient, ItemsServer, openapi_document
from .model import Item, ItemsRepository, item_codec

SEED = Item("abc123", "Sample item", 1)


def _serve(args: argparse.Namespace) -> int:
    repository = ItemsRepository(path=args.data) if args.data else ItemsRepository()
    if not repository.snapshot():
        repository = ItemsRepository([SEED], path=args.data)
    try:
        sock = loopback.bind_socket(args.host, args.port)
    except OSError as exc:
        print(f"error: cannot listen on {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    print(f"serving on http://{args.host}:{sock.getsockname()[1]}", flush=True)
    try:
        loopback.serve(ItemsServer().router(repository), sock)
    except KeyboardInterrupt:
        pass
    return 0


def _call(args: argparse.Namespace, make_call) -> int:
    try:
        transport = loopback.HttpTransport(args.base_url)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        result = asyncio.run(make_call(ItemsClient(transport)))
    except client.InvocationError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return 1
    print(item_codec.encode(result))
    return 0


def _get_item(args: argparse.Namespace) -> int:
    return _call(args, lambda api: api.get_item(args.id))


def _create_item(args: argparse.Namespace) -> int:
    try:
        item = Item(args.id, args.name, args.quantity)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return _call(args, lambda api: api.create_item(item))


def _docs(args: argparse.Namespace) -> int:
    text = serialize_openapi(openapi_document()) + "\n"
    if args.output is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="endpoints-demo", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    serve = commands.add_parser("serve", help="run the items server")
    serve.add_argument("--port", type=int, required=True)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--data", help="JSON file persisting the items")
    serve.set_defaults(run=_serve)

    get_item = commands.add_parser("get-item", help="fetch one item")
    get_item.add_argument("--base-url", required=True)
    get_item.add_argument("id")
    get_item.set_defaults(run=_get_item)

    create = commands.add_parser("create-item", help="store an item")
    create.add_argument("--base-url", required=True)
    create.add_argument("--id", required=True)
    create.add_argument("--name", required=True)
    create.add_argument("--quantity", type=int, required=True)
    create.set_defaults(run=_create_item)

    docs = commands.add_parser("docs", help="print the OpenAPI document")
    docs.add_argument("--output", help="write to this file instead of stdout")
    docs.set_defaults(run=_docs)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING)
    args = build_parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
