import io
import json
from fractions import Fraction as F

import jsonschema
import pytest
from hypothesis import given, strategies as st

from llyricci.curvature import curvature_all_edges, kappa_lly
from llyricci.errors import ParseError
from llyricci.generators import complete, cycle, hypercube
from llyricci.report import (
    format_edge_list,
    json_report_write,
    make_document,
    parse_edge_list,
    rational_from_json,
    rational_to_json,
    to_json_value,
    validate_report,
)
from llyricci.search import scan_conjecture1
from llyricci.verifiers import check_main_bound


class TestEdgeList:
    def test_parse(self):
        g = parse_edge_list("# square\n4 4\n0 1\n1 2\n2 3\n3 0\n")
        assert g == cycle(4)

    def test_round_trip(self):
        g = hypercube(3)
        assert parse_edge_list(format_edge_list(g)) == g

    @pytest.mark.parametrize("text,line", [
        ("", 1),
        ("3\n", 1),
        ("3 2\n0 1\n", 1),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 5\n", 2),
        ("3 2\n0 1\n\n1 0\n", 4),
        ("3 1\n1 1\n", 2),
    ])
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line


class TestRationals:
    def test_examples(self):
        assert rational_to_json(F(2, 3)) == {"num": 2, "den": 3}
        assert rational_to_json(F(-4)) == {"num": -4, "den": 1}
        big = F(3**40, 2**60)
        out = rational_to_json(big)
        assert out == {"num": str(3**40), "den": str(2**60)}
        assert rational_from_json(out) == big

    @given(st.fractions())
    def test_round_trip(self, q):
        assert rational_from_json(json.loads(json.dumps(rational_to_json(q)))) == q

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            to_json_value({"x": 0.5})


def _walk(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _walk(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _walk(v)
    else:
        yield obj


class TestDocuments:
    def test_q2_curvature_report(self):
        g = hypercube(2)
        doc = make_document("family:hypercube:2", g, curvature=curvature_all_edges(g))
        validate_report(doc)
        assert len(doc["curvature"]) == 4
        assert all(e["kappa"] == {"num": 1, "den": 1} for e in doc["curvature"])
        assert doc["input"] == {"descriptor": "family:hypercube:2", "n": 4, "m": 4}

    def test_witness_and_notes(self):
        g = complete(3)
        doc = make_document("k3", g, curvature=[kappa_lly(g, 0, 1)], witness=True)
        validate_report(doc)
        entry = doc["curvature"][0]
        assert entry["notes"] and set(entry["witness"]) == {"0", "1", "2"}

    def test_verdict_document(self):
        g = hypercube(3)
        doc = make_document("q3", g, verdicts=[check_main_bound(g)])
        validate_report(doc)
        assert doc["verdicts"][0]["holds"] is True

    def test_scan_document_has_no_floats(self):
        doc = make_document("enum:5", scan=scan_conjecture1("enum:5"))
        validate_report(doc)
        buf = io.StringIO()
        json_report_write(doc, buf)
        assert not any(isinstance(v, float) for v in _walk(json.loads(buf.getvalue())))

    def test_schema_rejects_float_kappa(self):
        g = hypercube(2)
        doc = make_document("q2", g, curvature=curvature_all_edges(g))
        doc["curvature"][0]["kappa"] = 1.0
        with pytest.raises(jsonschema.ValidationError):
            validate_report(doc)
