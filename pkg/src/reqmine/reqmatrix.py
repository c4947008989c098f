"""Requirement adjacency built from mined rules, and the groups it induces."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .apriori import AssociationRule
from .dsu import DisjointSet
from .errors import UnknownRequirement


@dataclass(frozen=True)
class RequirementMatrix:
    """``cells[i][j] == 1`` records an implication requirements[i] => requirements[j]."""

    requirements: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        reqs = tuple(self.requirements)
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "requirements", reqs)
        object.__setattr__(self, "cells", cells)
        r = len(reqs)
        if len(set(reqs)) != r:
            raise ValueError("requirements must be distinct")
        if len(cells) != r or any(len(row) != r for row in cells):
            raise ValueError(f"cells must be {r}x{r}")
        for i, row in enumerate(cells):
            if row[i] != 0:
                raise ValueError(f"diagonal cell {i} must be 0")
            if any(c not in (0, 1) for c in row):
                raise ValueError(f"row {i} has a non-binary cell")

    @property
    def size(self) -> int:
        return len(self.requirements)

    def directed_pairs(self) -> list[tuple[int, int]]:
        """Read the matrix back as (antecedent, consequent) attribute pairs."""
        reqs = self.requirements
        return [
            (reqs[i], reqs[j])
            for i, row in enumerate(self.cells)
            for j, c in enumerate(row)
            if c
        ]

    def undirected_pairs(self) -> list[tuple[int, int]]:
        """Index pairs (i, j), i < j, linked in either direction."""
        r = self.size
        return [
            (i, j)
            for i in range(r)
            for j in range(i + 1, r)
            if self.cells[i][j] or self.cells[j][i]
        ]

    def transpose(self) -> "RequirementMatrix":
        return RequirementMatrix(self.requirements, tuple(zip(*self.cells)) if self.cells else ())


def build_matrix(rules: Iterable[AssociationRule], requirements: Sequence[int]) -> RequirementMatrix:
    """Mark cell (i, j) for every rule requirement_i => requirement_j.

    A rule with several items on a side marks every antecedent/consequent
    pair, so ``{a} => {b, c}`` sets both a->b and a->c.
    """
    reqs = tuple(requirements)
    pos = {attr: i for i, attr in enumerate(reqs)}
    grid = [[0] * len(reqs) for _ in reqs]
    for rule in rules:
        for attr in rule.antecedent + rule.consequent:
            if attr not in pos:
                raise UnknownRequirement(f"rule {rule.antecedent} => {rule.consequent} mentions attribute {attr} outside the requirement set")
        for a in rule.antecedent:
            for b in rule.consequent:
                if a != b:
                    grid[pos[a]][pos[b]] = 1
    return RequirementMatrix(reqs, tuple(tuple(row) for row in grid))


def extract_groups(matrix: RequirementMatrix) -> list[tuple[int, ...]]:
    """Connected components of the matrix with edge direction ignored.

    Returns attribute ids per group, singletons included, groups ordered by
    smallest member position in ``matrix.requirements``.
    """
    dsu = DisjointSet(matrix.size)
    for i, j in matrix.undirected_pairs():
        dsu.union(i, j)
    return [tuple(matrix.requirements[i] for i in g) for g in dsu.groups()]
