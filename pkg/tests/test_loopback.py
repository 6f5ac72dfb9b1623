import pytest

from endpoints import client, loopback
from endpoints.demo.api import ItemsClient
from endpoints.http import HttpRequest

from support import ITEM


def test_get_over_http(run, live_server):
    api = ItemsClient(loopback.HttpTransport(live_server))
    assert run(api.get_item("abc123")).id == "abc123"


def test_raw_target_reaches_router(run, live_server):
    transport = loopback.HttpTransport(live_server)
    res = run(transport.send(HttpRequest("GET", "/item/a%20b")))
    assert res.status == 404
    res = run(transport.send(HttpRequest("POST", "/item/abc123")))
    assert (res.status, res.header("allow")) == (405, "GET")


def test_create_then_get_over_http(run, live_server):
    api = ItemsClient(loopback.HttpTransport(live_server))
    item = ITEM.__class__("a b/ü?", "created over http", 9)
    assert run(api.create_item(item)) == item
    assert run(api.get_item("a b/ü?")) == item


def test_unreachable_host_is_transport_failure(run):
    sock = loopback.bind_socket()
    port = sock.getsockname()[1]
    sock.close()
    api = ItemsClient(loopback.HttpTransport(f"http://127.0.0.1:{port}", timeout=2))
    with pytest.raises(client.TransportFailure):
        run(api.get_item("x"))


def test_base_url_must_be_http():
    with pytest.raises(ValueError):
        loopback.HttpTransport("ftp://example")


def test_bind_socket_reports_port_in_use():
    sock = loopback.bind_socket()
    try:
        with pytest.raises(OSError):
            loopback.bind_socket(port=sock.getsockname()[1])
    finally:
        sock.close()
