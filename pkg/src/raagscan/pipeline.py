"""The search pipeline: gates, random search, corpus scans, and fixtures.

One graph flows through three gates, in order, short-circuiting at the
first failure:

  1. transvection gate: no vertex dominates another, so the subgroup
     generated by partial conjugations has finite index in Out;
  2. forest gate: every support graph is a forest, so that subgroup is the
     RAAG on the commutation graph theta;
  3. obstruction check: if the flag complex of theta is not Cohen-Macaulay
     (detected here through non-purity, optionally through disconnectedness
     in positive dimension), the RAAG on theta is not a duality group and
     Out is not a virtual duality group.

Full homological Cohen-Macaulay verification is deliberately kept out of
the hot loop and run only on demand for found examples.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Iterable, Optional

from .cm import (
    MODE_FULL,
    is_cohen_macaulay,
)
from .complexes import flag_complex
from .graphs import (
    GraphError,
    SimpleGraph,
    canonical_form,
    connected_components,
    enumerate_nonisomorphic,
    erdos_renyi,
    graph6_decode,
    graph6_encode,
    mix_seed,
    splitmix64,
)
from .pso import BACKEND_COMBINATORIAL, all_supports_forests, theta_graph
from .raag_props import is_transvection_free

SCHEMA_VERSION = 1

STAGE_TRANSVECTION = "TransvectionGate"
STAGE_FOREST = "ForestGate"
STAGE_THETA = "ThetaBuilt"
STAGE_OBSTRUCTION = "ObstructionFound"
STAGE_CLEAN = "CleanPass"

OBSTRUCTION_NONPURE = "NonPure"
OBSTRUCTION_DISCONNECTED = "DisconnectedPositiveDim"
DEFAULT_OBSTRUCTIONS = frozenset({OBSTRUCTION_NONPURE})
ALL_OBSTRUCTIONS = frozenset({OBSTRUCTION_NONPURE, OBSTRUCTION_DISCONNECTED})

_STAGE_ORDER = [
    STAGE_TRANSVECTION,
    STAGE_FOREST,
    STAGE_THETA,
    STAGE_OBSTRUCTION,
    STAGE_CLEAN,
]


@dataclass
class ScanReport:
    graph_code: str
    n: int
    edge_count: int
    stage_reached: str
    obstruction: Optional[str] = None
    theta_code: Optional[str] = None
    witnesses: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)
    seed_info: Optional[tuple[int, int]] = None

    def to_json(self, include_timing: bool = False) -> dict:
        out: dict = {
            "schema_version": SCHEMA_VERSION,
            "graph_code": self.graph_code,
            "n": self.n,
            "edge_count": self.edge_count,
            "stage_reached": self.stage_reached,
            "obstruction": self.obstruction,
            "theta_code": self.theta_code,
            "witnesses": self.witnesses,
        }
        if self.seed_info is not None:
            out["seed_info"] = {
                "master_seed": self.seed_info[0],
                "sample_index": self.seed_info[1],
            }
        if include_timing:
            out["timing"] = self.timing
        return out

    def to_jsonl(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json(include_timing), sort_keys=True)


def run_pipeline(
    graph: SimpleGraph,
    obstructions: frozenset[str] = DEFAULT_OBSTRUCTIONS,
    full_cm: bool = False,
) -> ScanReport:
    """Run the gate sequence on one graph; gate failures are verdicts."""
    if graph.n < 1:
        raise GraphError("the pipeline needs at least one vertex")
    unknown = obstructions - ALL_OBSTRUCTIONS
    if unknown:
        raise ValueError(f"unknown obstructions: {sorted(unknown)}")
    report = ScanReport(
        graph_code=canonical_form(graph),
        n=graph.n,
        edge_count=graph.edge_count(),
        stage_reached=STAGE_TRANSVECTION,
    )

    started = time.perf_counter()
    free, witness = is_transvection_free(graph)
    report.timing["transvection_gate"] = time.perf_counter() - started
    if not free:
        report.witnesses["domination_pair"] = list(witness)
        return report

    report.stage_reached = STAGE_FOREST
    started = time.perf_counter()
    forests, cycle_witness = all_supports_forests(graph)
    report.timing["forest_gate"] = time.perf_counter() - started
    if not forests:
        vertex, cycle = cycle_witness
        report.witnesses["support_cycle"] = {"vertex": vertex, "cycle": cycle}
        return report

    started = time.perf_counter()
    theta = theta_graph(graph, BACKEND_COMBINATORIAL)
    report.timing["theta"] = time.perf_counter() - started
    report.stage_reached = STAGE_THETA
    report.theta_code = canonical_form(theta.theta)
    report.witnesses["theta_generators"] = [
        pc.to_json() for pc in theta.generator_labels
    ]

    started = time.perf_counter()
    complex_ = flag_complex(theta.theta)
    found = None
    if OBSTRUCTION_NONPURE in obstructions and not complex_.is_pure():
        sizes = sorted({len(f) for f in complex_.facets})
        found = OBSTRUCTION_NONPURE
        report.witnesses["facet_sizes"] = sizes
    elif (
        OBSTRUCTION_DISCONNECTED in obstructions
        and complex_.dimension() >= 1
        and len(connected_components(theta.theta)) > 1
    ):
        found = OBSTRUCTION_DISCONNECTED
        report.witnesses["theta_components"] = len(
            connected_components(theta.theta)
        )
    report.timing["obstruction_check"] = time.perf_counter() - started

    if found is not None:
        report.stage_reached = STAGE_OBSTRUCTION
        report.obstruction = found
        if full_cm:
            report.witnesses["theta_full_cm"] = is_cohen_macaulay(
                complex_, MODE_FULL
            ).to_json()
    else:
        report.stage_reached = STAGE_CLEAN
    return report


# -- random search -------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    n: int
    p: float | tuple[float, float]
    sample_count: int
    master_seed: int
    obstruction_set: frozenset[str] = DEFAULT_OBSTRUCTIONS
    jobs: int = 1

    def validate(self) -> None:
        if self.sample_count < 1:
            raise ValueError("sample_count must be at least 1")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        lo, hi = self.p_range()
        if not (0.0 <= lo <= hi <= 1.0):
            raise ValueError(f"edge probability range {self.p} outside [0, 1]")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def p_range(self) -> tuple[float, float]:
        if isinstance(self.p, tuple):
            return self.p
        return (self.p, self.p)


def sample_graph(config: SearchConfig, index: int) -> SimpleGraph:
    """The index-th sample of the configured stream, scheduling-independent."""
    sample_seed = mix_seed(config.master_seed, index)
    lo, hi = config.p_range()
    if lo == hi:
        p = lo
    else:
        sample_seed, draw = splitmix64(sample_seed)
        p = lo + (hi - lo) * (draw / 2.0**64)
    return erdos_renyi(config.n, p, sample_seed)


def _search_chunk(args) -> list[ScanReport]:
    config, start, stop = args
    out = []
    for index in range(start, stop):
        graph = sample_graph(config, index)
        report = run_pipeline(graph, config.obstruction_set)
        report.seed_info = (config.master_seed, index)
        out.append(report)
    return out


@dataclass
class SearchSummary:
    total: int
    stage_counts: dict[str, int]
    found: list[str]  # canonical codes of the distinct obstructed classes
    per_n_counts: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "total": self.total,
            "stage_counts": self.stage_counts,
            "found_classes": self.found,
            "per_n_counts": {str(k): v for k, v in self.per_n_counts.items()},
        }


def _summarize(reports: Iterable[ScanReport]) -> SearchSummary:
    stage_counts = {stage: 0 for stage in _STAGE_ORDER}
    found: list[str] = []
    seen = set()
    per_n: dict[int, int] = {}
    total = 0
    for report in reports:
        total += 1
        stage_counts[report.stage_reached] += 1
        per_n[report.n] = per_n.get(report.n, 0) + 1
        if report.stage_reached == STAGE_OBSTRUCTION:
            if report.graph_code not in seen:
                seen.add(report.graph_code)
                found.append(report.graph_code)
    return SearchSummary(total, stage_counts, found, per_n)


@dataclass
class SearchResult:
    reports: list[ScanReport]
    summary: SearchSummary


def search_random(config: SearchConfig) -> SearchResult:
    """Evaluate the configured sample stream; output is independent of jobs.

    Reports come back ordered by sample index, so equal configurations give
    byte-identical serialized streams for any worker count.
    """
    config.validate()
    chunk = max(1, min(2048, config.sample_count // (config.jobs * 4) or 1))
    tasks = [
        (config, start, min(start + chunk, config.sample_count))
        for start in range(0, config.sample_count, chunk)
    ]
    reports: list[ScanReport] = []
    if config.jobs == 1:
        for task in tasks:
            reports.extend(_search_chunk(task))
    else:
        with Pool(config.jobs) as pool:
            for chunk_reports in pool.imap(_search_chunk, tasks):
                reports.extend(chunk_reports)
    return SearchResult(reports, _summarize(reports))


# -- corpus scans ---------------------------------------------------------------


@dataclass
class CorpusIssue:
    line_number: int
    message: str


def _scan_chunk(args) -> list[ScanReport]:
    codes, obstructions = args
    return [run_pipeline(graph6_decode(code), obstructions) for code in codes]


def scan_graphs(
    graphs: Iterable[SimpleGraph],
    obstructions: frozenset[str] = DEFAULT_OBSTRUCTIONS,
    jobs: int = 1,
) -> SearchResult:
    """Scan an explicit stream of graphs."""
    codes = [graph6_encode(g) for g in graphs]
    return _scan_codes(codes, obstructions, jobs)


def _scan_codes(codes, obstructions, jobs) -> SearchResult:
    chunk = max(1, min(4096, len(codes) // (jobs * 4) or 1))
    tasks = [
        (codes[start:start + chunk], obstructions)
        for start in range(0, len(codes), chunk)
    ]
    reports: list[ScanReport] = []
    if jobs == 1:
        for task in tasks:
            reports.extend(_scan_chunk(task))
    else:
        with Pool(jobs) as pool:
            for chunk_reports in pool.imap(_scan_chunk, tasks):
                reports.extend(chunk_reports)
    return SearchResult(reports, _summarize(reports))


def scan_corpus_file(
    lines: Iterable[str],
    obstructions: frozenset[str] = DEFAULT_OBSTRUCTIONS,
    jobs: int = 1,
) -> tuple[SearchResult, list[CorpusIssue]]:
    """Scan graph6 codes, one per line; malformed lines are reported and
    the scan continues."""
    codes = []
    issues = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            graph6_decode(line)
        except GraphError as exc:
            issues.append(CorpusIssue(line_number, str(exc)))
            continue
        codes.append(line)
    return _scan_codes(codes, obstructions, jobs), issues


def scan_enumerated(
    max_n: int,
    obstructions: frozenset[str] = DEFAULT_OBSTRUCTIONS,
    jobs: int = 1,
) -> SearchResult:
    """Scan every isomorphism class with 1..max_n vertices."""
    codes = []
    for n in range(1, max_n + 1):
        codes.extend(graph6_encode(g) for g in enumerate_nonisomorphic(n))
    return _scan_codes(codes, obstructions, jobs)


def write_jsonl(
    reports: Iterable[ScanReport],
    path: str,
    include_timing: bool = False,
    hits_only: bool = False,
) -> int:
    written = 0
    with open(path, "w") as handle:
        for report in reports:
            if hits_only and report.stage_reached != STAGE_OBSTRUCTION:
                continue
            handle.write(report.to_jsonl(include_timing) + "\n")
            written += 1
    return written
