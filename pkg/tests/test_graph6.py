import io

import pytest
from hypothesis import given, settings, strategies as st

from llyricci.enumeration import canonical_code, enumerate_up_to
from llyricci.errors import ParseError
from llyricci.generators import complete, cycle, hypercube, path
from llyricci.graph import Graph
from llyricci.graph6 import _encode_size, graph6_decode, graph6_encode, read_graph6_stream


def test_small_known_strings():
    assert graph6_decode("A_") == complete(2)
    assert graph6_decode("@").n == 1
    assert graph6_encode(cycle(4)) == "Cl"
    assert graph6_encode(complete(2)) == "A_"
    assert graph6_encode(path(1)) == "@"


def test_header_is_stripped():
    assert graph6_decode(">>graph6<<A_\n") == complete(2)


@pytest.mark.parametrize("text,offset", [("A ", 1), ("Cé", 1)])
def test_bad_byte(text, offset):
    with pytest.raises(ParseError) as exc:
        graph6_decode(text, 7)
    assert exc.value.line == 7 and exc.value.offset == offset


@pytest.mark.parametrize("text", ["", "C", "~?", "A"])
def test_truncated(text):
    with pytest.raises(ParseError):
        graph6_decode(text)


def test_trailing_bytes():
    with pytest.raises(ParseError):
        graph6_decode("A_?")


def test_round_trip_enumeration():
    for g in enumerate_up_to(6):
        assert graph6_decode(graph6_encode(g)) == g


def test_medium_size_field():
    g = hypercube(6)  # 64 vertices needs the four-byte size field
    text = graph6_encode(g)
    assert text[0] == "~"
    assert graph6_decode(text) == g


def test_large_size_field():
    # eight-byte size field; a full adjacency body at this size is too large to build
    head = "~~" + "".join(chr(63 + (258048 >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    assert _encode_size(258048) == head
    with pytest.raises(ParseError, match="bit section"):
        graph6_decode(head + "???")


@given(st.integers(1, 70).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=60))))
@settings(max_examples=60, deadline=None)
def test_round_trip_random(arg):
    n, pairs = arg
    edges = sorted({(min(u, v), max(u, v)) for u, v in pairs if u != v})
    g = Graph.from_edge_list(n, edges)
    assert graph6_decode(graph6_encode(g)) == g


def test_stream_reports_bad_lines():
    out = list(read_graph6_stream(io.StringIO("A_\n\nbad line\nCl\n")))
    assert [no for no, _ in out] == [1, 3, 4]
    assert isinstance(out[1][1], ParseError) and out[1][1].line == 3
    assert canonical_code(out[2][1]) == canonical_code(cycle(4))
