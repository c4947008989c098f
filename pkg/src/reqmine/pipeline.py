"""End-to-end requirement prioritization and report rendering."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .apriori import (
    AprioriParams,
    AssociationRule,
    FrequentItemSet,
    derive_rules,
    find_frequent_itemsets,
)
from .correlation import CorrelationGraph, WeightedEdge, build_correlation_graph
from .errors import ReqmineError, StageError
from .mst import SpanningForest, maximum_spanning_forest
from .reqmatrix import RequirementMatrix, build_matrix, extract_groups
from .survey import (
    ResponseMatrix,
    attribute_counts,
    attribute_frequencies,
    load_survey,
    select_top_requirements,
)

log = logging.getLogger(__name__)

JSON_KEYS = (
    "frequencies",
    "top_requirements",
    "frequent_itemsets",
    "rules",
    "requirement_matrix",
    "groups",
    "correlation_edges",
    "spanning_forest",
    "priority_order",
)


@dataclass(frozen=True)
class PipelineConfig:
    input_path: Path | None = None
    params: AprioriParams = field(default_factory=AprioriParams)
    # None means "same as params.min_support"
    top_threshold: float | None = None
    complete_graph: bool = False
    all_attributes: bool = False
    output_format: str = "text"
    out_path: Path | None = None
    dot_path: Path | None = None

    def __post_init__(self):
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.top_threshold is not None and not self.top_threshold >= 0.0:
            raise ValueError(f"top threshold must be non-negative, got {self.top_threshold}")

    @property
    def threshold(self) -> float:
        if self.top_threshold is None:
            return self.params.min_support
        return self.top_threshold


@dataclass(frozen=True)
class PriorityReport:
    matrix: ResponseMatrix
    params: AprioriParams
    frequencies: tuple[float, ...]
    counts: tuple[int, ...]
    top_requirements: tuple[int, ...]
    frequent_itemsets: tuple[FrequentItemSet, ...]
    rules: tuple[AssociationRule, ...]
    requirement_matrix: RequirementMatrix
    groups: tuple[tuple[int, ...], ...]
    graph: CorrelationGraph
    forest: SpanningForest
    priority_order: tuple[tuple[int, float], ...]
    threshold: float = 0.0
    warnings: tuple[str, ...] = ()

    @property
    def names(self) -> tuple[str, ...]:
        return self.matrix.attribute_names


def priority_ordering(forest: SpanningForest, freqs: Sequence[float]) -> list[tuple[int, float]]:
    """Rank forest nodes by the summed weight of their incident tree edges.

    Ties go to the more frequently requested attribute, then to the lower
    index.  Isolated nodes score 0.0.
    """
    score = {node: 0.0 for node in forest.nodes}
    for e in forest.edges:
        score[e.u] += e.weight
        score[e.v] += e.weight
    order = sorted(score, key=lambda v: (-score[v], -freqs[v], v))
    return [(v, score[v]) for v in order]


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except ReqmineError as exc:
        raise StageError(name, exc) from exc


def analyze(matrix: ResponseMatrix, config: PipelineConfig | None = None) -> PriorityReport:
    """Run every stage on an already-parsed response matrix."""
    config = config or PipelineConfig()
    params = config.params
    freqs = attribute_frequencies(matrix)
    counts = attribute_counts(matrix)

    if config.all_attributes:
        top = list(range(matrix.n_attributes))
    else:
        top = select_top_requirements(freqs, config.threshold)
    requirements = sorted(top)
    req_set = set(requirements)

    frequent = _stage("apriori", find_frequent_itemsets, matrix, params)
    rules = [
        r
        for r in _stage("rules", derive_rules, frequent, matrix, params)
        if req_set.issuperset(r.antecedent + r.consequent)
    ]
    reqmatrix = _stage("requirement-matrix", build_matrix, rules, requirements)
    groups = extract_groups(reqmatrix)

    graph = _stage(
        "correlation",
        build_correlation_graph,
        matrix,
        reqmatrix,
        complete=config.complete_graph,
        skip_degenerate=True,
    )
    warnings = []
    for u, v in graph.skipped:
        msg = (
            f"skipped edge {matrix.attribute_names[u]!r} -- {matrix.attribute_names[v]!r}: "
            "constant column, correlation undefined"
        )
        log.warning(msg)
        warnings.append(msg)

    forest = maximum_spanning_forest(graph)
    order = priority_ordering(forest, freqs)

    return PriorityReport(
        matrix=matrix,
        params=params,
        frequencies=tuple(freqs),
        counts=tuple(counts),
        top_requirements=tuple(top),
        frequent_itemsets=tuple(frequent),
        rules=tuple(rules),
        requirement_matrix=reqmatrix,
        groups=tuple(groups),
        graph=graph,
        forest=forest,
        priority_order=tuple(order),
        threshold=config.threshold,
        warnings=tuple(warnings),
    )


def run_pipeline(config: PipelineConfig) -> PriorityReport:
    if config.input_path is None:
        raise ValueError("config.input_path is required")
    matrix = _stage("ingest", load_survey, config.input_path)
    return analyze(matrix, config)


def check_report(report: PriorityReport) -> None:
    """Cross-stage consistency checks; raises AssertionError on violation."""
    reqs = set(report.requirement_matrix.requirements)
    for r in report.rules:
        assert reqs.issuperset(r.antecedent + r.consequent), f"rule {r} leaves the requirement set"
    rebuilt = build_matrix(report.rules, report.requirement_matrix.requirements)
    assert rebuilt == report.requirement_matrix, "requirement matrix does not match the rules"
    graph_edges = {(e.u, e.v) for e in report.graph.edges}
    for e in report.forest.edges:
        assert (e.u, e.v) in graph_edges, f"forest edge {e} missing from the graph"
    assert len(report.forest.edges) == len(report.forest.nodes) - report.forest.component_count
    assert sorted(v for v, _ in report.priority_order) == sorted(report.forest.nodes)


# -- rendering ---------------------------------------------------------------


def _num(x: float):
    return float(f"{x:.12g}")


def _edge_json(e: WeightedEdge, names):
    return {"source": names[e.u], "target": names[e.v], "weight": _num(e.weight)}


def report_to_dict(report: PriorityReport) -> dict:
    names = report.names
    n = report.matrix.n_rows
    rm = report.requirement_matrix
    doc = {
        "frequencies": [
            {"attribute": names[j], "count": c, "support": _num(c / n)}
            for j, c in enumerate(report.counts)
        ],
        "top_requirements": [names[j] for j in report.top_requirements],
        "frequent_itemsets": [
            {"items": [names[i] for i in f.items], "count": f.count, "support": _num(f.support)}
            for f in report.frequent_itemsets
        ],
        "rules": [
            {
                "antecedent": [names[i] for i in r.antecedent],
                "consequent": [names[i] for i in r.consequent],
                "support": _num(r.support),
                "confidence": _num(r.confidence),
                "lift": _num(r.lift),
            }
            for r in report.rules
        ],
        "requirement_matrix": {
            "requirements": [names[j] for j in rm.requirements],
            "cells": [list(row) for row in rm.cells],
        },
        "groups": [[names[j] for j in g] for g in report.groups],
        "correlation_edges": [_edge_json(e, names) for e in report.graph.edges],
        "spanning_forest": {
            "edges": [_edge_json(e, names) for e in report.forest.edges],
            "total_weight": _num(report.forest.total_weight),
            "component_count": report.forest.component_count,
        },
        "priority_order": [
            {"attribute": names[v], "score": _num(s)} for v, s in report.priority_order
        ],
    }
    assert tuple(doc) == JSON_KEYS
    return doc


def export_json(report: PriorityReport | dict) -> str:
    doc = report if isinstance(report, dict) else report_to_dict(report)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    graph: CorrelationGraph,
    forest: SpanningForest,
    groups: Sequence[Sequence[int]] | None = None,
) -> str:
    """Undirected DOT rendering of the correlation graph.

    Tree edges are bold; every edge is labelled with its weight to three
    decimals.  When ``groups`` is given, each multi-member group is drawn
    as a cluster.
    """
    name = {node: graph.names[i] for i, node in enumerate(graph.nodes)}
    in_tree = {(e.u, e.v) for e in forest.edges}
    lines = ["graph G {"]
    clustered = set()
    if groups:
        for k, members in enumerate(g for g in groups if len(g) > 1):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append(f'    label="group {k + 1}";')
            for node in members:
                lines.append(f"    {_dot_id(name[node])};")
                clustered.add(node)
            lines.append("  }")
    for node in graph.nodes:
        if node not in clustered:
            lines.append(f"  {_dot_id(name[node])};")
    for e in sorted(graph.edges, key=lambda e: (e.u, e.v)):
        attrs = f'label="{e.weight:.3f}"'
        if (e.u, e.v) in in_tree:
            attrs += ", style=bold, penwidth=2"
        lines.append(f"  {_dot_id(name[e.u])} -- {_dot_id(name[e.v])} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_text(report: PriorityReport, style=None) -> str:
    """Human-readable report with values rounded to three decimals.

    ``style(text, kind)`` may wrap headings and highlights in terminal
    escapes; the default leaves text plain.
    """
    style = style or (lambda text, kind: text)
    names = report.names
    out = []

    def heading(title):
        if out:
            out.append("")
        out.append(style(title, "heading"))

    heading(f"Attribute frequencies (N = {report.matrix.n_rows})")
    width = max(len(s) for s in names)
    for j, c in enumerate(report.counts):
        mark = " *" if j in report.top_requirements else ""
        out.append(f"  {names[j]:<{width}}  {c:>4}  {report.frequencies[j]:.3f}{mark}")

    heading(f"Top requirements (support >= {report.threshold:.2f})")
    for j in report.top_requirements:
        out.append(f"  {names[j]}")

    p = report.params
    heading(
        f"Frequent itemsets (min support {p.min_support:.2f}, max length {p.max_rule_length})"
    )
    for f in report.frequent_itemsets:
        out.append(f"  {{{', '.join(names[i] for i in f.items)}}}  {f.support:.3f}")

    heading(f"Rules (min confidence {p.min_confidence:.2f}, min lift {p.min_lift:.2f})")
    if not report.rules:
        out.append("  (none)")
    for r in report.rules:
        ante = ", ".join(names[i] for i in r.antecedent)
        cons = ", ".join(names[i] for i in r.consequent)
        out.append(
            f"  {ante} => {cons}  supp {r.support:.3f}  conf {r.confidence:.3f}  lift {r.lift:.3f}"
        )

    rm = report.requirement_matrix
    heading("Requirement matrix")
    labels = [f"R{i + 1}" for i in range(rm.size)]
    for label, attr in zip(labels, rm.requirements):
        out.append(f"  {label} = {names[attr]}")
    if rm.size:
        out.append("      " + "  ".join(f"{lab:>3}" for lab in labels))
        for label, row in zip(labels, rm.cells):
            out.append(f"  {label:>3} " + "  ".join(f"{c:>3}" for c in row))

    heading("Groups")
    for k, g in enumerate(report.groups, start=1):
        out.append(f"  G{k}: {', '.join(names[j] for j in g)}")

    heading("Correlation edges")
    if not report.graph.edges:
        out.append("  (none)")
    for e in report.graph.edges:
        out.append(f"  {names[e.u]} -- {names[e.v]}  {e.weight:.3f}")
    for w in report.warnings:
        out.append(style(f"  warning: {w}", "warning"))

    f = report.forest
    heading(f"Maximum spanning forest ({f.component_count} component(s))")
    for e in f.edges:
        out.append(f"  {names[e.u]} -- {names[e.v]}  {e.weight:.3f}")
    out.append(style(f"  total weight {f.total_weight:.3f}", "highlight"))

    heading("Priority order")
    for rank, (v, s) in enumerate(report.priority_order, start=1):
        out.append(f"  {rank}. {names[v]}  ({s:.3f})")
    return "\n".join(out) + "\n"
