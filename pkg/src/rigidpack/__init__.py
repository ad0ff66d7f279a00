"""rigidpack: (2,3)-sparse decompositions, rigid-subgraph and spanning-tree
packings, and exhaustive partition-condition checking on multigraphs."""

from .conditions import (
    ConditionReport,
    GammaResult,
    check_cover_condition,
    check_necessary_condition,
    check_parthm_condition,
    check_tree_packing_condition,
    edge_connectivity,
    essential_edge_connectivity,
    gamma,
    gamma2,
    is_bracket_partition_connected,
    is_essentially_edge_connected,
    is_pq_connected,
)
from .enumeration import (
    PARTITION_LIMIT,
    SUBSET_LIMIT,
    bell_number,
    enumerate_partitions,
    enumerate_vertex_subsets,
)
from .errors import (
    GraphInputError,
    LimitExceededError,
    RigidpackError,
    SearchBudgetExceededError,
)
from .matroids import (
    PebbleGame,
    RankResult,
    graphic_independent,
    graphic_rank,
    is_minimally_rigid,
    is_rigid,
    rigidity_rank,
    sparse_independent,
    sparse_independent_bruteforce,
)
from .multigraph import (
    Multigraph,
    Partition,
    adjacent_number,
    cross_edge_count,
    format_graph,
    induced_edge_count,
    load_graph,
    parse_graph,
    random_multigraph,
    write_graph,
)
from .ndt import (
    BoundedCover,
    check_kwz_condition,
    degree_bound,
    degree_bound_floor,
    ndt_decompose,
    sparse_to_forest_plus_bounded,
    sparse_to_two_forests,
    verify_bounded_cover,
)
from .packing import (
    Packing,
    PackingFailure,
    pack_rigid_and_trees,
    pack_spanning_trees,
    verify_packing,
)
from .union import (
    Decomposition,
    UnionRank,
    decompose_forests,
    decompose_sparse,
    union_rank,
    union_rank_bruteforce,
    verify_decomposition,
)

__version__ = "0.1.0"
