"""Depth index, intertwining number and related statistics on set partitions
and perfect matchings, with exhaustive verification of their identities."""

from .core import (
    LEFT_INF,
    RIGHT_INF,
    Arc,
    GeneralizedArc,
    PartitionError,
    PerfectMatching,
    SetPartition,
    as_involution,
    extended_arcs,
    format_matching,
    format_partition,
    matching_from_involution,
    matching_from_partition,
    parse_matching,
    parse_partition,
    partition_arcs,
)
from .enumeration import (
    DistributionTable,
    generating_polynomial,
    joint_distribution,
    perfect_matchings,
    set_partitions,
)
from .qpoly import QPolynomial, q_double_factorial, q_int
from .stats import (
    StatRecord,
    arc_depth,
    cr_ne_al,
    crossing_number,
    depth_index,
    intertwining_number,
    length_ds,
    span,
    stat_record,
    total_vertex_depth,
    vertex_depth,
)

__version__ = "0.1.0"
