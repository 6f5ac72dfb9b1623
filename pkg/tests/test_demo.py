import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

import endpoints.demo
from endpoints.demo import cli
from endpoints.demo.model import Item, ItemsRepository, item_codec, item_list_codec

from conftest import start_server, stop_server

DEMO_DIR = Path(endpoints.demo.__file__).parent


def test_item_validation():
    for args in [("", "n", 1), ("a", "n", -1), ("a", 3, 1), ("a", "n", True)]:
        with pytest.raises(ValueError):
            Item(*args)


def test_item_codec_round_trip():
    item = Item("ü id", "名前", 7)
    text = item_codec.encode(item)
    assert json.loads(text) == {"id": "ü id", "name": "名前", "quantity": 7}
    assert item_codec.decode(text) == item
    assert item_list_codec.decode(item_list_codec.encode([item, item])) == [item, item]
    for bad in ['{"id": "a"}', "[]", '{"id": "a", "name": "b", "quantity": 1, "x": 0}']:
        with pytest.raises(ValueError):
            item_codec.decode(bad)


def test_repository_persistence(tmp_path):
    path = tmp_path / "items.json"
    repo = ItemsRepository(path=path)
    repo.store(Item("b", "B", 2))
    repo.store(Item("a", "A", 1))
    assert ItemsRepository(path=path).snapshot() == repo.snapshot()
    assert [i.id for i in repo.page()] == ["a", "b"]
    assert repo.page(2) == [] and repo.page(0) == []


def test_paths_and_verbs_written_once():
    sources = "".join(p.read_text() for p in DEMO_DIR.rglob("*.py"))
    assert len(re.findall(r'"item"', sources)) == 1
    assert len(re.findall(r'"items"', sources)) == 1
    assert len(re.findall(r'self\.get\(', sources)) == 2
    assert len(re.findall(r'self\.post\(', sources)) == 1


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "endpoints.demo", *args], capture_output=True, text=True, timeout=60)


def test_docs_to_stdout_is_deterministic():
    first, second = _cli("docs"), _cli("docs")
    assert first.returncode == 0 and first.stdout == second.stdout
    doc = json.loads(first.stdout)
    for key in ("openapi", "info", "paths"):
        assert key in doc
    for path, operations in doc["paths"].items():
        assert path.startswith("/")
        for operation in operations.values():
            assert operation["responses"] and all("description" in r for r in operation["responses"].values())


def test_docs_to_file(tmp_path):
    out = tmp_path / "openapi.json"
    assert cli.main(["docs", "--output", str(out)]) == 0
    assert out.read_text() == _cli("docs").stdout


def test_docs_unwritable_path(tmp_path):
    assert cli.main(["docs", "--output", str(tmp_path / "missing" / "x.json")]) == 1


def test_usage_error_exit_code():
    assert _cli("get-item").returncode == 2
    assert _cli("frobnicate").returncode == 2


def test_get_item_cli(live_server):
    res = _cli("get-item", "--base-url", live_server, "abc123")
    assert res.returncode == 0
    assert item_codec.decode(res.stdout) == cli.SEED
    missing = _cli("get-item", "--base-url", live_server, "missing")
    assert missing.returncode == 1 and "unexpected-status" in missing.stderr


def test_get_item_unreachable():
    res = _cli("get-item", "--base-url", "http://127.0.0.1:1", "abc123")
    assert res.returncode == 1 and "transport-failure" in res.stderr


def test_get_item_encodes_id_on_the_wire():
    # a raw socket server records the request line exactly as sent
    import socket
    import threading

    listener = socket.socket()
    listener.bind(("127.0.0.1", 0))
    listener.listen(1)
    seen = []

    def accept():
        conn, _ = listener.accept()
        seen.append(conn.recv(65536).split(b"\r\n", 1)[0])
        conn.sendall(b"HTTP/1.1 404 Not Found\r\ncontent-length: 0\r\nconnection: close\r\n\r\n")
        conn.close()

    thread = threading.Thread(target=accept)
    thread.start()
    res = _cli("get-item", "--base-url", f"http://127.0.0.1:{listener.getsockname()[1]}", "a b")
    thread.join(10)
    listener.close()
    assert seen == [b"GET /item/a%20b HTTP/1.1"]
    assert res.returncode == 1


def test_create_item_cli(live_server):
    res = _cli("create-item", "--base-url", live_server, "--id", "new one", "--name", "N", "--quantity", "4")
    assert res.returncode == 0
    assert item_codec.decode(res.stdout) == Item("new one", "N", 4)
    fetched = _cli("get-item", "--base-url", live_server, "new one")
    assert item_codec.decode(fetched.stdout) == Item("new one", "N", 4)
    assert _cli("create-item", "--base-url", live_server, "--id", "x", "--name", "N", "--quantity", "-1").returncode == 2


def test_serve_port_in_use():
    from endpoints import loopback

    sock = loopback.bind_socket()
    try:
        res = _cli("serve", "--port", str(sock.getsockname()[1]))
    finally:
        sock.close()
    assert res.returncode == 1 and "cannot listen" in res.stderr


def test_restart_reloads_state(tmp_path):
    data = tmp_path / "items.json"
    proc, url = start_server("--data", str(data))
    try:
        assert _cli("create-item", "--base-url", url, "--id", "kept", "--name", "K", "--quantity", "1").returncode == 0
    finally:
        stop_server(proc)
    before = ItemsRepository(path=data).snapshot()
    proc, url = start_server("--data", str(data))
    try:
        res = _cli("get-item", "--base-url", url, "kept")
    finally:
        stop_server(proc)
    assert item_codec.decode(res.stdout) == Item("kept", "K", 1)
    assert ItemsRepository(path=data).snapshot() == before
