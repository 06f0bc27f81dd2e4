"""Statistics of set partitions drawn as arc diagrams: crossings,
nestings and alignments, the involution exchanging the first two, the
left/right Charlier-diagram encodings, and exact generating functions."""

from .core import (
    Edge,
    ParseError,
    PartitionType,
    SetPartition,
    build_partition,
    edges,
    enumerate_by_type,
    enumerate_matchings,
    enumerate_partitions,
    format_partition,
    parse_partition,
    partition_from_edges,
    partition_from_json,
    partition_to_json,
    type_of,
)
from .stats import (
    CountStats,
    StatTriple,
    TraceGraph,
    alignments,
    alignments_at,
    count_stats,
    crossings,
    crossings_at,
    endpoint_triples,
    link_rank,
    link_ranks,
    nestings,
    nestings_at,
    stat_triple,
    trace,
    vacancy_count,
    vacancy_counts,
)
from .bijection import (
    CharlierDiagram,
    LatticePath,
    decode_left,
    decode_right,
    diagram_from_json,
    diagram_to_json,
    encode_left,
    encode_right,
    enumerate_bm,
    enumerate_charlier,
    enumerate_rbm,
    format_diagram,
    involute,
    parse_diagram,
    parse_path,
    path_to_type,
    type_to_path,
)
from .series import (
    CFSpec,
    MultiPoly,
    ONE,
    P,
    Q,
    SeriesExpansion,
    U1,
    U2,
    V,
    ZERO,
    bell_cf_spec,
    bell_poly_cf,
    bell_poly_enum,
    bell_poly_paths,
    cf_expand,
    cf_expand_dp,
    edge_cf_spec,
    matching_alignment_poly,
    matching_alignment_poly_enum,
    matching_poly,
    matching_poly_enum,
    partition_alignment_poly,
    partition_alignment_poly_enum,
    partition_edge_poly,
    partition_edge_poly_enum,
    pq_integer,
)
from .render import render_svg

__version__ = "0.1.0"
