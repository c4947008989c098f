"""Level-wise frequent itemset mining and association rule derivation.

Items are attribute indices and itemsets are strictly increasing tuples of
them.  Supports are kept as integer row counts; fractions are only formed
when a value is reported or compared against a threshold.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ItemOutOfRange, MixedSizes
from .survey import ResponseMatrix

ItemSet = tuple[int, ...]


@dataclass(frozen=True)
class AprioriParams:
    min_support: float = 0.5
    min_confidence: float = 0.75
    max_rule_length: int = 2
    min_lift: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.min_support <= 1.0:
            raise ValueError(f"min_support must lie in (0, 1], got {self.min_support}")
        if not 0.0 < self.min_confidence <= 1.0:
            raise ValueError(f"min_confidence must lie in (0, 1], got {self.min_confidence}")
        if isinstance(self.max_rule_length, bool) or not isinstance(self.max_rule_length, int):
            raise TypeError("max_rule_length must be an integer")
        if self.max_rule_length < 2:
            raise ValueError(f"max_rule_length must be >= 2, got {self.max_rule_length}")
        if not self.min_lift >= 0.0:
            raise ValueError(f"min_lift must be non-negative, got {self.min_lift}")


@dataclass(frozen=True, order=True)
class FrequentItemSet:
    items: ItemSet
    count: int
    n_rows: int

    @property
    def support(self) -> float:
        return self.count / self.n_rows

    def __len__(self):
        return len(self.items)


@dataclass(frozen=True)
class AssociationRule:
    antecedent: ItemSet
    consequent: ItemSet
    support: float
    confidence: float
    lift: float

    @property
    def items(self) -> ItemSet:
        return tuple(sorted(self.antecedent + self.consequent))

    def __len__(self):
        return len(self.antecedent) + len(self.consequent)


def _check_items(matrix: ResponseMatrix, itemset: Iterable[int]) -> ItemSet:
    items = tuple(itemset)
    m = matrix.n_attributes
    for item in items:
        if not 0 <= item < m:
            raise ItemOutOfRange(f"item {item} outside 0..{m - 1}")
    return items


def support_count(matrix: ResponseMatrix, itemset: Iterable[int]) -> int:
    """Number of rows holding a 1 in every column of ``itemset``."""
    items = _check_items(matrix, itemset)
    masks = matrix.column_masks
    rows = (1 << matrix.n_rows) - 1
    for item in items:
        rows &= masks[item]
        if not rows:
            break
    return rows.bit_count()


def itemset_support(matrix: ResponseMatrix, itemset: Iterable[int]) -> float:
    return support_count(matrix, itemset) / matrix.n_rows


def _as_itemset(x) -> ItemSet:
    return tuple(x.items) if isinstance(x, FrequentItemSet) else tuple(x)


def generate_candidates(frequent_k: Sequence) -> list[ItemSet]:
    """Join frequent k-itemsets into (k+1)-candidates, then prune.

    Two itemsets are joined when they share their first k-1 items.  A
    candidate survives only if every one of its k-subsets is in
    ``frequent_k``.  Accepts itemset tuples or :class:`FrequentItemSet`.
    """
    level = sorted({_as_itemset(x) for x in frequent_k})
    if not level:
        return []
    k = len(level[0])
    if k < 1 or any(len(s) != k for s in level):
        raise MixedSizes(f"itemsets of sizes {sorted({len(s) for s in level})} given; expected one size >= 1")
    known = set(level)

    candidates = []
    for i, a in enumerate(level):
        for b in level[i + 1:]:
            if a[:-1] != b[:-1]:
                # level is sorted, so no later b shares a's prefix either
                break
            cand = a + (b[-1],)
            if all(cand[:j] + cand[j + 1:] in known for j in range(k + 1)):
                candidates.append(cand)
    return candidates


def find_frequent_itemsets(matrix: ResponseMatrix, params: AprioriParams) -> list[FrequentItemSet]:
    """All itemsets of size 1..max_rule_length meeting ``min_support``.

    Sorted by size, then lexicographically.
    """
    n = matrix.n_rows
    masks = matrix.column_masks
    found: list[FrequentItemSet] = []

    # row bitsets of the current level's itemsets, reused to extend by one item
    level: dict[ItemSet, int] = {}
    for j, mask in enumerate(masks):
        count = mask.bit_count()
        if count / n >= params.min_support:
            level[(j,)] = mask
            found.append(FrequentItemSet((j,), count, n))

    size = 1
    while level and size < params.max_rule_length:
        next_level: dict[ItemSet, int] = {}
        for cand in generate_candidates(list(level)):
            rows = level[cand[:-1]] & masks[cand[-1]]
            count = rows.bit_count()
            if count / n >= params.min_support:
                next_level[cand] = rows
                found.append(FrequentItemSet(cand, count, n))
        level = next_level
        size += 1
    return found


def derive_rules(
    frequent: Sequence[FrequentItemSet], matrix: ResponseMatrix, params: AprioriParams
) -> list[AssociationRule]:
    """Rules A => B over every partition of each frequent itemset.

    A rule is kept when confidence = supp(A u B) / supp(A) reaches
    ``min_confidence`` and lift = confidence / supp(B) reaches ``min_lift``.
    Sorted by (antecedent, consequent).
    """
    n = matrix.n_rows
    counts = {f.items: f.count for f in frequent}

    def count_of(items):
        # subsets of a frequent itemset are frequent, so normally cached
        if items not in counts:
            counts[items] = support_count(matrix, items)
        return counts[items]

    rules = []
    for fis in frequent:
        z = fis.items
        if not 2 <= len(z) <= params.max_rule_length:
            continue
        cz = fis.count
        for r in range(1, len(z)):
            for ante in combinations(z, r):
                cons = tuple(i for i in z if i not in ante)
                ca = count_of(ante)
                cb = count_of(cons)
                confidence = cz / ca
                if confidence < params.min_confidence:
                    continue
                lift = (cz * n) / (ca * cb)
                if lift < params.min_lift:
                    continue
                rules.append(AssociationRule(ante, cons, cz / n, confidence, lift))
    rules.sort(key=lambda rule: (rule.antecedent, rule.consequent))
    return rules
