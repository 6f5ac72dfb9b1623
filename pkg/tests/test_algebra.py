import pytest
from hypothesis import given, strategies as st

from endpoints import algebra, client, codecs, server
from endpoints.algebra import UNIT, Combination
from endpoints.docs import openapi
from endpoints.http import HttpRequest

from support import PlainClient, PlainServer

values = st.one_of(st.integers(), st.text(), st.tuples(st.integers(), st.text()))


@given(values)
def test_unit_absorption(x):
    assert Combination(True, False).join(UNIT, x) == x
    assert Combination(False, True).join(x, UNIT) == x
    assert Combination(True, False).split(x) == (UNIT, x)
    assert Combination(False, True).split(x) == (x, UNIT)
    assert Combination(True, True).join(UNIT, UNIT) == UNIT


@given(values, values, values)
def test_pairing_is_left_nested_and_invertible(a, b, c):
    pair = Combination(False, False)
    assert pair.join(pair.join(a, b), c) == ((a, b), c)
    assert pair.split(pair.join(a, b)) == (a, b)


def test_split_rejects_non_pair():
    with pytest.raises(TypeError):
        Combination(False, False).split("not a pair")


ALL = [client.Endpoints(), server.Endpoints(), openapi.Endpoints()]


@pytest.mark.parametrize("alg", ALL, ids=type)
def test_static_segment_rejects_slash(alg):
    with pytest.raises(ValueError):
        alg.static_segment("a/b")


@pytest.mark.parametrize("alg", ALL, ids=type)
def test_query_param_rejects_empty_name(alg):
    with pytest.raises(ValueError):
        alg.query_param("", codecs.text)


def test_interpreter_missing_unit_cannot_be_instantiated():
    class Incomplete(algebra.JsonEntities):
        pass

    class HalfClient(Incomplete, client.Endpoints):
        pass

    with pytest.raises(TypeError):
        HalfClient()


segments = st.lists(
    st.one_of(st.text(st.characters(blacklist_categories=("Cs",), blacklist_characters="/")), st.just(None)),
    max_size=4,
)


def _build(alg, parts):
    return [alg.static_segment(p) if p is not None else alg.segment(codecs.integer) for p in parts]


@given(segments, st.data())
def test_root_is_identity(parts, data):
    c, s = client.Endpoints(), server.Endpoints()
    ints = [data.draw(st.integers(0, 10**6)) for p in parts if p is None]
    info = UNIT
    for i, v in enumerate(ints):
        info = v if i == 0 else (info, v)
    p = c.path(*_build(c, parts))
    rendered = p.render(info)
    assert c.chain_path(c.root(), p).render(info) == rendered
    assert c.chain_path(p, c.root()).render(info) == rendered
    sp = s.path(*_build(s, parts))
    assert s.chain_path(s.root(), sp).match(rendered) == sp.match(rendered)
    assert s.chain_path(sp, s.root()).match(rendered) == sp.match(rendered)
    assert sp.match(rendered).info == info


@given(st.text(min_size=1), st.integers(-(2**63), 2**63 - 1), st.text(min_size=1))
def test_chain_rendering_is_associative(a, b, c):
    alg = client.Endpoints()
    pa, pb, pc = alg.segment(codecs.text), alg.segment(codecs.integer), alg.segment(codecs.text)
    left = alg.chain_path(alg.chain_path(pa, pb), pc)
    right = alg.chain_path(pa, alg.chain_path(pb, pc))
    assert left.render(((a, b), c)) == right.render((a, (b, c)))


def test_descriptions_are_deterministic():
    first, second = PlainClient(), PlainClient()
    assert first.get_item.encode("x y") == second.get_item.encode("x y")
    srv1, srv2 = PlainServer(), PlainServer()
    msg = HttpRequest("GET", "/item/x%20y")
    assert srv1.get_item.request.decode(msg) == srv2.get_item.request.decode(msg)


def test_carriers_are_immutable():
    p = client.Endpoints().root()
    with pytest.raises(AttributeError):
        p.unit = False
