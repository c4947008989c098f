"""Pearson correlation between binary columns and the weighted requirement graph."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegenerateVariance, LengthMismatch
from .reqmatrix import RequirementMatrix
from .survey import ResponseMatrix


@dataclass(frozen=True, order=True)
class WeightedEdge:
    u: int
    v: int
    weight: float

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop on {self.u}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class CorrelationGraph:
    nodes: tuple[int, ...]
    edges: tuple[WeightedEdge, ...]
    names: tuple[str, ...] = ()
    # (u, v) pairs dropped because one column had zero variance
    skipped: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        names = tuple(self.names) or tuple(str(x) for x in self.nodes)
        if len(names) != len(self.nodes):
            raise ValueError("names must align with nodes")
        object.__setattr__(self, "names", names)
        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            raise ValueError("duplicate nodes")
        pairs = set()
        for e in self.edges:
            if e.u not in node_set or e.v not in node_set:
                raise ValueError(f"edge ({e.u}, {e.v}) touches an unknown node")
            if (e.u, e.v) in pairs:
                raise ValueError(f"duplicate edge ({e.u}, {e.v})")
            pairs.add((e.u, e.v))

    def name_of(self, node: int) -> str:
        return self.names[self.nodes.index(node)]


def pearson(x: Sequence[int], y: Sequence[int]) -> float:
    """Raw-score Pearson coefficient of two equal-length 0/1 columns.

    Sums are accumulated as integers, so the only rounding happens in the
    final square root and division.
    """
    n = len(x)
    if n != len(y):
        raise LengthMismatch(f"columns have lengths {n} and {len(y)}")
    if n < 2:
        raise LengthMismatch(f"need at least 2 observations, got {n}")
    sx = sum(x)
    sy = sum(y)
    sxy = sum(a * b for a, b in zip(x, y))
    sxx = sum(a * a for a in x)
    syy = sum(b * b for b in y)
    var_x = n * sxx - sx * sx
    var_y = n * syy - sy * sy
    if var_x == 0 or var_y == 0:
        raise DegenerateVariance("constant column: correlation undefined")
    num = n * sxy - sx * sy
    if var_x == var_y:
        # keeps r(x, x) == 1 and r(x, 1 - x) == -1 exact
        return num / var_x
    return num / math.sqrt(var_x * var_y)


def build_correlation_graph(
    matrix: ResponseMatrix,
    reqmatrix: RequirementMatrix,
    *,
    complete: bool = False,
    skip_degenerate: bool = False,
) -> CorrelationGraph:
    """Weight each linked requirement pair by the correlation of its columns.

    With ``complete=True`` every pair of requirements gets an edge, linked
    or not.  A constant column raises :class:`DegenerateVariance` naming
    the pair unless ``skip_degenerate`` is set, in which case the pair is
    recorded in ``skipped`` instead.
    """
    reqs = reqmatrix.requirements
    for attr in reqs:
        if not 0 <= attr < matrix.n_attributes:
            raise ValueError(f"requirement {attr} has no column in the response matrix")
    if complete:
        pairs = [(i, j) for i in range(len(reqs)) for j in range(i + 1, len(reqs))]
    else:
        pairs = reqmatrix.undirected_pairs()

    names = matrix.attribute_names
    edges, skipped = [], []
    for i, j in pairs:
        u, v = sorted((reqs[i], reqs[j]))
        try:
            w = pearson(matrix.column(u), matrix.column(v))
        except DegenerateVariance as exc:
            if not skip_degenerate:
                raise DegenerateVariance(
                    f"{names[u]!r} -- {names[v]!r}: {exc}", pair=(u, v)
                ) from None
            skipped.append((u, v))
            continue
        edges.append(WeightedEdge(u, v, w))
    edges.sort(key=lambda e: (e.u, e.v))
    return CorrelationGraph(
        nodes=reqs,
        edges=tuple(edges),
        names=tuple(names[a] for a in reqs),
        skipped=tuple(sorted(skipped)),
    )
