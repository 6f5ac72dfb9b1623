import json

import pytest

from endpoints import codecs
from endpoints.docs import openapi
from endpoints.docs.openapi import DocumentedResponse, DocumentedSegment, generate_openapi, serialize_openapi
from endpoints.demo.api import ItemsDocs
from endpoints.demo.model import item_codec

alg = openapi.JsonEntities()


def documented_get_item(a):
    return a.endpoint(
        a.get(a.url(a.path("item", a.segment(codecs.text, "id")))),
        a.json_response(item_codec, documentation="The item identified by 'id'"),
        summary="Get an item",
    )


def test_documented_get_item_structure():
    ep = documented_get_item(alg)
    assert ep.method.value == "GET"
    assert ep.path_template == ("item", DocumentedSegment("id", "string"))
    assert ep.template == "/item/{id}"
    assert ep.responses == (DocumentedResponse(200, "The item identified by 'id'", "application/json"),)


def test_documented_root_endpoint():
    ep = alg.endpoint(alg.get(alg.url(alg.root())), alg.empty_response())
    assert ep.template == "/"
    assert ep.responses == (DocumentedResponse(200, "", None),)
    assert "content" not in ep.operation()["responses"]["200"]


def test_documented_create_item():
    ep = ItemsDocs().create_item
    op = ep.operation()
    assert (ep.method.value, ep.template) == ("POST", "/items")
    assert list(op["requestBody"]["content"]) == ["application/json"]
    assert list(op["responses"]) == ["200"]


def test_empty_segment_name_rejected():
    with pytest.raises(ValueError):
        alg.segment(codecs.text, "")


def test_duplicate_parameter_names_rejected():
    with pytest.raises(ValueError, match="id"):
        alg.endpoint(
            alg.get(alg.url(alg.path(alg.segment(codecs.text, "id")), alg.query_param("id", codecs.text))),
            alg.empty_response(),
        )


def test_generate_groups_by_template():
    doc = generate_openapi("t", "1", [documented_get_item(alg)])
    assert list(doc.paths) == ["/item/{id}"] and list(doc.paths["/item/{id}"]) == ["get"]
    assert generate_openapi("t", "1", []).paths == {}
    docs = ItemsDocs()
    doc = generate_openapi("t", "1", [docs.create_item, docs.list_items])
    operations = [(path, method) for path, ops in doc.paths.items() for method in ops]
    assert operations == [("/items", "post"), ("/items", "get")]


def test_duplicate_operation_rejected():
    with pytest.raises(ValueError, match="GET /item/{id}"):
        generate_openapi("t", "1", [documented_get_item(alg), documented_get_item(alg)])


def test_parameters():
    op = ItemsDocs().list_items.operation()
    assert op["parameters"] == [{"name": "page", "in": "query", "required": False, "schema": {"type": "integer"}}]
    int_ep = alg.endpoint(alg.get(alg.url(alg.path("n", alg.segment(codecs.integer, "n")))), alg.empty_response())
    assert int_ep.operation()["parameters"][0]["schema"] == {"type": "integer"}


def test_every_segment_name_appears_once():
    for ep in ItemsDocs().all_endpoints():
        names = [p.name for p in ep.path_template if isinstance(p, DocumentedSegment)]
        params = [p["name"] for p in ep.operation()["parameters"] if p["in"] == "path"]
        for name in names:
            assert ep.template.count("{" + name + "}") == 1
            assert params.count(name) == 1


def test_serialization():
    empty = serialize_openapi(generate_openapi("Empty", "0", []))
    assert json.loads(empty) == {"openapi": "3.0.3", "info": {"title": "Empty", "version": "0"}, "paths": {}}
    text = serialize_openapi(generate_openapi("t", "1", [documented_get_item(alg)]))
    assert '"description": "The item identified by \'id\'"' in text
    assert json.dumps(json.loads(text), indent=2, ensure_ascii=False) == text


def test_generation_is_order_independent():
    docs = ItemsDocs()
    forward = serialize_openapi(generate_openapi("t", "1", [docs.get_item, docs.list_items]))
    backward = serialize_openapi(generate_openapi("t", "1", [docs.list_items, docs.get_item]))
    assert forward == backward


def test_static_literals_are_encoded_in_templates():
    ep = alg.endpoint(alg.get(alg.url(alg.path("a b", alg.segment(codecs.text, "x")))), alg.empty_response())
    assert ep.template == "/a%20b/{x}"
