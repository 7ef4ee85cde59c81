from fractions import Fraction as F

import pytest

from llyricci.errors import ArgumentError, ScaleError
from llyricci.generators import complete, cycle, hypercube, path
from llyricci.graph import Graph
from llyricci.enumeration import canonical_code
from llyricci.graph6 import graph6_decode
from llyricci.search import (
    c5_power_experiment,
    evaluate_graph,
    scan,
    scan_conjecture1,
    scan_conjecture2,
)


class TestEvaluate:
    def test_c5_tight_for_c2(self):
        rec = evaluate_graph("c2", "c5", cycle(5))
        assert rec.min_curvature == F(1, 2)
        assert rec.c2_ratio == 1 and rec.satisfies_c2
        assert not rec.candidate_counterexample

    def test_k2_values(self):
        rec = evaluate_graph("c2", "k2", complete(2))
        assert rec.c2_ratio == F(4, 5)
        rec = evaluate_graph("c1", "k2", complete(2))
        assert rec.c1_bound == (2, 2) and rec.c1_ratio == (1, 1)

    def test_q3(self):
        rec = evaluate_graph("c2", "q3", hypercube(3))
        assert rec.c2_ratio == F(64, 125)
        rec = evaluate_graph("c1", "q3", hypercube(3))
        assert rec.c1_ratio == (1, 1) and rec.satisfies_c1

    def test_triangle_skipped_for_c1(self):
        assert evaluate_graph("c1", "k3", complete(3)).status == "skipped-filter"
        assert evaluate_graph("c2", "k3", complete(3)).status == "checked"

    def test_statuses(self):
        assert evaluate_graph("c2", "p4", path(4)).status == "out-of-hypothesis"
        assert evaluate_graph("c2", "k1", Graph.from_edge_list(1, [])).status == "skipped-trivial"
        split = Graph.from_edge_list(4, [(0, 1), (2, 3)])
        assert evaluate_graph("c2", "split", split).status == "skipped-disconnected"


class TestScan:
    def test_c1_enum6(self):
        summary, records = scan_conjecture1("enum:6")
        assert summary.candidates == 0
        assert summary.scanned == len(records) == 1 + 1 + 2 + 6 + 21 + 112
        assert summary.tight_c1 == [r.id for r in records if r.c1_ratio and r.c1_ratio[0] == 1]
        assert len(summary.tight_c1) == 2  # K2 and C4

    def test_c2_enum6(self):
        summary, records = scan_conjecture2("enum:6")
        assert summary.candidates == 0
        assert summary.max_c2_ratio[1] == 1
        tight = [graph6_decode(r.graph6) for r in records if r.id in summary.tight_c2]
        assert [canonical_code(g) for g in tight] == [canonical_code(cycle(5))]

    def test_deterministic_and_parallel(self):
        a = scan_conjecture2("enum:5")[1]
        b = scan_conjecture2("enum:5")[1]
        c = scan_conjecture2("enum:5", jobs=2)[1]
        assert a == b == c

    def test_sink_sees_records_in_order(self):
        seen = []
        summary, records = scan_conjecture1("enum:4", sink=seen.append, keep_records=False)
        assert records == [] and len(seen) == summary.scanned
        assert seen == scan_conjecture1("enum:4")[1]

    def test_file_source_with_parse_error(self, tmp_path):
        p = tmp_path / "in.g6"
        p.write_text("A_\nzz\nDhc\n")
        summary, records = scan_conjecture2(f"file:{p}")
        assert [r.id for r in records] == ["line:1", "line:2", "line:3"]
        assert records[1].status == "parse-error" and records[1].error
        assert records[2].c2_ratio == 1  # Dhc is C5
        assert summary.totals == {"checked": 2, "parse-error": 1}

    def test_bad_source(self):
        with pytest.raises(ArgumentError):
            scan_conjecture1("web:x")
        with pytest.raises(ArgumentError):
            scan_conjecture1("enum:x")
        with pytest.raises(ArgumentError):
            scan("c3", [])


class TestC5Powers:
    def test_k1(self):
        out = c5_power_experiment(1)
        assert out["min_curvature"] == F(1, 2) and out["tight"]

    def test_k2(self):
        out = c5_power_experiment(2)
        assert out["n"] == 25 and out["max_degree"] == 4
        assert out["min_curvature"] == F(1, 4)
        assert out["n_squared"] == out["five_power"] == 625

    @pytest.mark.slow
    def test_k3(self):
        out = c5_power_experiment(3)
        assert out["n"] == 125 and out["tight"] and out["positive_curvature"]
        assert out["min_curvature"] == F(1, 6)

    def test_ceiling(self):
        with pytest.raises(ScaleError):
            c5_power_experiment(4)
        with pytest.raises(ArgumentError):
            c5_power_experiment(0)
