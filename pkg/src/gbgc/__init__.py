"""Granular-ball graph coarsening toolkit.

Reduces an undirected graph to a smaller one by adaptively partitioning its
nodes into quality-scored granular-balls (supernodes), then measures how
well the reduction preserves structure via spectral distance and
Rayleigh-quotient diagnostics.
"""

from .coarse import CoarsenedGraph, ProjectionMap, build_coarse_graph, build_projection
from .dataio import (
    CoarsenRecord,
    DatasetBundle,
    parse_edge_list,
    parse_tudataset,
    write_results,
)
from .engine import (
    CoarsenConfig,
    GranularBall,
    Partition,
    SplitDecision,
    achieved_ratio,
    adaptive_coarsen,
    ball_quality,
    coarsen,
    default_init_target,
    init_balls,
    make_ball,
    ratio_coarsen,
    split_ball,
)
from .errors import DatasetFormatError, GbgcError, GraphValidationError
from .generators import erdos_renyi, random_partition
from .graph import (
    BfsLayering,
    Graph,
    bfs_layers,
    connected_components,
    count_ordered_triangles_and_wedges,
    from_edge_list,
    induced_subgraph,
)
from .spectral import (
    EvalConfig,
    SpectralReport,
    eigenvalues_symmetric,
    evaluate,
    laplacian,
    rayleigh_pair,
    spectral_distance,
)

__version__ = "0.1.0"

__all__ = [
    "BfsLayering",
    "CoarsenConfig",
    "CoarsenRecord",
    "CoarsenedGraph",
    "DatasetBundle",
    "DatasetFormatError",
    "EvalConfig",
    "GbgcError",
    "Graph",
    "GranularBall",
    "GraphValidationError",
    "Partition",
    "ProjectionMap",
    "SpectralReport",
    "SplitDecision",
    "achieved_ratio",
    "adaptive_coarsen",
    "ball_quality",
    "bfs_layers",
    "build_coarse_graph",
    "build_projection",
    "coarsen",
    "connected_components",
    "count_ordered_triangles_and_wedges",
    "default_init_target",
    "eigenvalues_symmetric",
    "erdos_renyi",
    "evaluate",
    "from_edge_list",
    "induced_subgraph",
    "init_balls",
    "laplacian",
    "make_ball",
    "parse_edge_list",
    "parse_tudataset",
    "random_partition",
    "ratio_coarsen",
    "rayleigh_pair",
    "spectral_distance",
    "split_ball",
    "write_results",
]
