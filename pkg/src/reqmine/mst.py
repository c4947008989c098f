"""Maximum spanning forest by Kruskal's method.

Edges are scanned from heaviest to lightest, equal weights in ascending
(u, v) order, and an edge is kept when its endpoints still lie in
different components.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .correlation import CorrelationGraph, WeightedEdge
from .dsu import DisjointSet


@dataclass(frozen=True)
class SpanningForest:
    nodes: tuple[int, ...]
    edges: tuple[WeightedEdge, ...]
    total_weight: float
    component_count: int


def total_weight(forest: SpanningForest | Iterable[WeightedEdge]) -> float:
    edges = forest.edges if isinstance(forest, SpanningForest) else forest
    return math.fsum(e.weight for e in edges)


def _kruskal(graph: CorrelationGraph, key) -> SpanningForest:
    index = {node: i for i, node in enumerate(graph.nodes)}
    dsu = DisjointSet(len(graph.nodes))
    chosen = []
    for edge in sorted(graph.edges, key=key):
        if len(chosen) == len(graph.nodes) - 1:
            break
        if dsu.union(index[edge.u], index[edge.v]):
            chosen.append(edge)
    return SpanningForest(
        nodes=graph.nodes,
        edges=tuple(chosen),
        total_weight=total_weight(chosen),
        component_count=dsu.components,
    )


def maximum_spanning_forest(graph: CorrelationGraph) -> SpanningForest:
    """Heaviest acyclic edge set spanning every connected component.

    Edges appear in the order they were selected.  A disconnected graph
    gives a forest; ``component_count`` says how many trees it has.
    """
    for e in graph.edges:
        if not math.isfinite(e.weight):
            raise ValueError(f"edge ({e.u}, {e.v}) has non-finite weight {e.weight}")
    return _kruskal(graph, key=lambda e: (-e.weight, e.u, e.v))


def minimum_spanning_forest(graph: CorrelationGraph) -> SpanningForest:
    return _kruskal(graph, key=lambda e: (e.weight, e.u, e.v))


def negated(graph: CorrelationGraph) -> CorrelationGraph:
    return CorrelationGraph(
        nodes=graph.nodes,
        edges=tuple(WeightedEdge(e.u, e.v, -e.weight) for e in graph.edges),
        names=graph.names,
    )
