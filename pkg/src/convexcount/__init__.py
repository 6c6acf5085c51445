"""Exact counting of plane graph classes on convex point sets via production
matrices, with closed-form, spectral and brute-force verification."""

from .exact import (
    CountVector,
    HTMatrix,
    IntPolynomial,
    LAMBDA,
    binomial,
    charpoly_determinant,
    exact_div,
    mat_vec,
)
from .closedform import (
    connected_entry,
    connected_vector,
    geometric_entry,
    geometric_vector,
    kangulation_entry,
    kangulation_vector,
    lemma1_check,
    partition_entry,
    partition_vector,
)
from .production import (
    GraphClassSpec,
    LevelCount,
    RiordanTriple,
    build_connected_matrix,
    build_from_riordan,
    build_geometric_matrix,
    build_k_angulation_matrix,
    build_partition_matrix,
    build_relation_matrix,
    connected_class,
    connected_totals,
    count_sequence,
    geometric_class,
    iterate_counts,
    k_angulation_class,
    k_angulation_total,
    partition_class,
    relation_class,
    relation_weights,
    riordan_triple_of,
)
from .spectral import (
    CharPolySequence,
    EigenPair,
    charpoly_closed_connected,
    charpoly_closed_geometric,
    charpoly_closed_kangulation,
    charpoly_closed_partition,
    charpoly_recurrence,
    dominant_eigenvalue,
    eigenvector_from_charpoly,
    precision_bits,
    real_roots,
)
from .oracle import (
    Dissection,
    NonCrossingPartition,
    PlaneGraph,
    count_spanning_structures,
    enumerate_connected,
    enumerate_dissections,
    enumerate_noncrossing_graphs,
    enumerate_partitions,
    isolation_degree,
    spanning_counts,
    visibility_degree,
)

__version__ = "0.1.0"
