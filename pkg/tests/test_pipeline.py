import json
import subprocess
import sys

import pytest

from raagscan.fixtures import (
    FixtureError,
    load_fixture,
    verify_fixtures,
)
from raagscan.graphs import (
    canonical_form,
    complete_graph,
    cycle_graph,
    disjoint_union,
    format_edge_list,
    graph6_decode,
    graph6_encode,
)
from raagscan.pipeline import (
    OBSTRUCTION_DISCONNECTED,
    OBSTRUCTION_NONPURE,
    STAGE_CLEAN,
    STAGE_FOREST,
    STAGE_OBSTRUCTION,
    STAGE_TRANSVECTION,
    SearchConfig,
    run_pipeline,
    scan_corpus_file,
    scan_enumerated,
    sample_graph,
    search_random,
    write_jsonl,
)


class TestRunPipeline:
    def test_cycle_clean_pass(self):
        report = run_pipeline(cycle_graph(5))
        assert report.stage_reached == STAGE_CLEAN
        assert report.theta_code is not None  # the empty graph's code
        assert report.obstruction is None

    def test_triangle_stops_at_transvection_gate(self):
        report = run_pipeline(complete_graph(3))
        assert report.stage_reached == STAGE_TRANSVECTION
        assert report.witnesses["domination_pair"] == [0, 1]
        assert report.theta_code is None

    def test_three_pentagons_stop_at_forest_gate(self):
        # transvection-free, but each support graph off a pentagon vertex
        # links the local edge with the two other pentagons in a triangle
        g = disjoint_union(
            disjoint_union(cycle_graph(5), cycle_graph(5)), cycle_graph(5)
        )
        report = run_pipeline(g)
        assert report.stage_reached == STAGE_FOREST
        assert "support_cycle" in report.witnesses

    def test_nine_vertex_gamma1_obstruction(self):
        gamma = load_fixture("nine_vertex_15.edges")
        report = run_pipeline(gamma)
        assert report.stage_reached == STAGE_OBSTRUCTION
        assert report.obstruction == OBSTRUCTION_NONPURE
        theta_fixture = load_fixture("nine_vertex_15_theta.edges")
        assert report.theta_code == canonical_form(theta_fixture)

    def test_two_part_union_obstruction(self):
        gamma = disjoint_union(
            load_fixture("two_part_gamma1.edges"),
            load_fixture("two_part_gamma2.edges"),
        )
        report = run_pipeline(gamma)
        assert report.stage_reached == STAGE_OBSTRUCTION
        assert report.obstruction == OBSTRUCTION_NONPURE

    def test_disconnected_obstruction_opt_in(self):
        gamma2 = load_fixture("nine_vertex_17.edges")
        # theta here is an edge plus a point: non-pure AND disconnected;
        # with only the disconnected obstruction selected it is still found
        report = run_pipeline(
            gamma2, obstructions=frozenset({OBSTRUCTION_DISCONNECTED})
        )
        assert report.stage_reached == STAGE_OBSTRUCTION
        assert report.obstruction == OBSTRUCTION_DISCONNECTED

    def test_self_certifying(self):
        gamma = load_fixture("nine_vertex_15.edges")
        first = run_pipeline(gamma)
        again = run_pipeline(graph6_decode(first.graph_code))
        assert first.to_json() == again.to_json()

    def test_full_cm_enrichment(self):
        gamma = load_fixture("nine_vertex_15.edges")
        report = run_pipeline(gamma, full_cm=True)
        assert report.witnesses["theta_full_cm"]["is_cm"] is False

    def test_unknown_obstruction_rejected(self):
        with pytest.raises(ValueError):
            run_pipeline(cycle_graph(5), obstructions=frozenset({"Sporadic"}))

    def test_timing_excluded_from_default_json(self):
        report = run_pipeline(cycle_graph(5))
        assert "timing" not in report.to_json()
        assert "timing" in report.to_json(include_timing=True)


class TestSearchRandom:
    def test_determinism_across_jobs(self):
        results = {}
        for jobs in (1, 2):
            cfg = SearchConfig(
                n=7, p=0.5, sample_count=400, master_seed=31337, jobs=jobs
            )
            lines = [r.to_jsonl() for r in search_random(cfg).reports]
            results[jobs] = "\n".join(lines)
        assert results[1] == results[2]

    def test_summary_counts(self):
        cfg = SearchConfig(n=6, p=0.4, sample_count=200, master_seed=7)
        result = search_random(cfg)
        assert result.summary.total == 200
        assert sum(result.summary.stage_counts.values()) == 200

    def test_sample_graph_deterministic(self):
        cfg = SearchConfig(n=9, p=0.4, sample_count=1, master_seed=55)
        assert sample_graph(cfg, 3) == sample_graph(cfg, 3)
        assert sample_graph(cfg, 3) != sample_graph(cfg, 4)

    def test_p_range_sweep(self):
        cfg = SearchConfig(
            n=9, p=(0.2, 0.8), sample_count=60, master_seed=99
        )
        cfg.validate()
        counts = {sample_graph(cfg, i).edge_count() for i in range(60)}
        assert len(counts) > 10  # sweep produces varied densities

    def test_invalid_config(self):
        with pytest.raises(ValueError):
            SearchConfig(n=9, p=1.4, sample_count=10, master_seed=0).validate()
        with pytest.raises(ValueError):
            SearchConfig(n=9, p=0.4, sample_count=0, master_seed=0).validate()

    def test_seed_info_recorded(self):
        cfg = SearchConfig(n=5, p=0.5, sample_count=3, master_seed=12)
        result = search_random(cfg)
        assert [r.seed_info for r in result.reports] == [
            (12, 0), (12, 1), (12, 2)
        ]


class TestScans:
    def test_enumerated_small(self):
        result = scan_enumerated(4)
        assert result.summary.total == 1 + 2 + 4 + 11
        assert result.summary.per_n_counts == {1: 1, 2: 2, 3: 4, 4: 11}
        assert result.summary.found == []

    def test_corpus_file_with_bad_line(self):
        lines = [graph6_encode(cycle_graph(5)), "@@@\x01", "A_"]
        result, issues = scan_corpus_file(lines)
        assert result.summary.total == 2
        assert len(issues) == 1 and issues[0].line_number == 2

    def test_write_jsonl(self, tmp_path):
        cfg = SearchConfig(n=5, p=0.5, sample_count=5, master_seed=4)
        result = search_random(cfg)
        out = tmp_path / "reports.jsonl"
        written = write_jsonl(result.reports, str(out))
        assert written == 5
        rows = [json.loads(line) for line in out.read_text().splitlines()]
        assert all(row["schema_version"] == 1 for row in rows)

    def test_jobs_do_not_change_scan_output(self):
        one = scan_enumerated(5, jobs=1)
        two = scan_enumerated(5, jobs=2)
        assert [r.to_json() for r in one.reports] == [
            r.to_json() for r in two.reports
        ]


class TestFixtureVerification:
    def test_all_pass(self):
        report = verify_fixtures()
        assert report.passed
        assert len(report.checks) == 6

    def test_missing_directory(self, tmp_path):
        with pytest.raises(FixtureError, match="missing"):
            verify_fixtures(str(tmp_path))

    def test_mutated_fixture_fails(self, tmp_path):
        # copy all fixtures, then delete one edge from the first 9-vertex
        # example; at least one assertion group must fail
        from raagscan.fixtures import FIXTURE_FILES

        for name in FIXTURE_FILES:
            graph = load_fixture(name)
            if name == "nine_vertex_15.edges":
                edges = graph.sorted_edges()[:-1]
                from raagscan.graphs import SimpleGraph

                graph = SimpleGraph(graph.n, edges)
            (tmp_path / name).write_text(format_edge_list(graph))
        report = verify_fixtures(str(tmp_path))
        assert not report.passed


class TestCli:
    def run_cli(self, *args):
        return subprocess.run(
            [sys.executable, "-m", "raagscan.cli", *args],
            capture_output=True, text=True,
        )

    def test_check_edges(self, tmp_path):
        path = tmp_path / "c5.edges"
        path.write_text(format_edge_list(cycle_graph(5)))
        proc = self.run_cli("check", str(path))
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["stage_reached"] == "CleanPass"

    def test_check_graph6_full_cm(self, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text(graph6_encode(cycle_graph(5)) + "\n")
        proc = self.run_cli(
            "check", str(path), "--format", "graph6", "--full-cm"
        )
        payload = json.loads(proc.stdout)
        assert payload["duality"]["is_duality_group"] is True

    def test_homology_command(self, tmp_path):
        path = tmp_path / "c5.edges"
        path.write_text(format_edge_list(cycle_graph(5)))
        proc = self.run_cli("homology", str(path))
        payload = json.loads(proc.stdout)
        assert payload["profile"] == {"1": {"rank": 1, "torsion": []}}

    def test_fixtures_command(self):
        proc = self.run_cli("fixtures")
        assert proc.returncode == 0
        assert proc.stdout.count("PASS") == 6

    def test_scan_enumerate(self):
        proc = self.run_cli("scan", "--enumerate", "4")
        payload = json.loads(proc.stdout)
        assert payload["total"] == 18
        assert payload["class_counts"]["including_order_zero"] == 19

    def test_search_command(self, tmp_path):
        out = tmp_path / "rows.jsonl"
        proc = self.run_cli(
            "search", "--n", "6", "--p", "0.5", "--count", "50",
            "--seed", "3", "--out", str(out),
        )
        assert proc.returncode == 0
        assert len(out.read_text().splitlines()) == 50

    def test_usage_error_exit_code(self):
        proc = self.run_cli("scan")
        assert proc.returncode == 1

    def test_missing_file_exit_code(self):
        proc = self.run_cli("check", "/nonexistent/file.edges")
        assert proc.returncode == 1
