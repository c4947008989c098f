"""Requirement prioritization from binary survey responses.

Pipeline: response frequencies, Apriori frequent itemsets and rules, a
requirement adjacency matrix and its groups, a Pearson-weighted
requirement graph, its maximum spanning forest, and a priority order.
"""
from .apriori import (
    AprioriParams,
    AssociationRule,
    FrequentItemSet,
    derive_rules,
    find_frequent_itemsets,
    generate_candidates,
    itemset_support,
    support_count,
)
from .correlation import CorrelationGraph, WeightedEdge, build_correlation_graph, pearson
from .dsu import DisjointSet
from .errors import (
    DegenerateVariance,
    DuplicateHeader,
    EmptyInput,
    ItemOutOfRange,
    LengthMismatch,
    MixedSizes,
    NonBinaryValue,
    RaggedRow,
    ReqmineError,
    StageError,
    UnknownRequirement,
)
from .mst import SpanningForest, maximum_spanning_forest, minimum_spanning_forest, total_weight
from .pipeline import (
    PipelineConfig,
    PriorityReport,
    analyze,
    export_dot,
    export_json,
    priority_ordering,
    render_text,
    run_pipeline,
)
from .reqmatrix import RequirementMatrix, build_matrix, extract_groups
from .survey import (
    ResponseMatrix,
    attribute_frequencies,
    load_survey,
    parse_survey,
    select_top_requirements,
    serialize_survey,
)

__version__ = "0.1.0"
