"""Production matrices for plane graph classes on convex point sets and the
counting engine that iterates v(i+1) = A v(i).

Five matrix families are provided: k-angulations by face count, all plane
graphs and connected plane graphs by visibility degree of the root vertex,
non-crossing partitions by isolation degree, and the relation matrix whose
band is a weighted sum of a supplied count sequence (connected graphs,
spanning trees or spanning paths, depending on what is being counted).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exact import CountVector, HTMatrix, binomial, exact_div, mat_vec

KANGULATION = "kangulation"
GEOMETRIC = "geometric"
CONNECTED = "connected"
PARTITION = "partition"
RELATION = "relation"

CLASS_NAMES = (KANGULATION, GEOMETRIC, CONNECTED, PARTITION, RELATION)


def build_k_angulation_matrix(k: int, r: int) -> HTMatrix:
    """r x r production matrix for k-angulations counted by number of k-gons.

    Subdiagonal 1; offset-m band entry C(k-2+m, k-3), so for k=3 the whole
    upper band is 1s.
    """
    if k < 3:
        raise ValueError("k-angulations require k >= 3")
    if r < 1:
        raise ValueError("matrix size must be >= 1")
    band = tuple(binomial(k - 2 + m, k - 3) for m in range(r))
    return HTMatrix(r, 1, band)


def build_geometric_matrix(n: int) -> HTMatrix:
    """n x n production matrix for plane graphs by visibility degree.

    Subdiagonal 2; offset-m band entry 2**(m+1), giving first row
    2, 4, 8, ..., 2**n.
    """
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    return HTMatrix(n, 2, tuple(2 ** (m + 1) for m in range(n)))


def build_connected_matrix(n: int) -> HTMatrix:
    """n x n production matrix for connected plane graphs by visibility degree.

    Subdiagonal 1; offset-m band entry 2**(m+2) - 1, giving first row
    3, 7, 15, ..., 2**(n+1) - 1.
    """
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    return HTMatrix(n, 1, tuple(2 ** (m + 2) - 1 for m in range(n)))


def build_partition_matrix(n: int) -> HTMatrix:
    """n x n production matrix for non-crossing partitions by isolation degree.

    Subdiagonal 1, zero main diagonal, offset-m band entry 2**(m-1) for
    m >= 1, giving first row 0, 1, 2, 4, ..., 2**(n-2).
    """
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    band = (0,) + tuple(2 ** (m - 1) for m in range(1, n))
    return HTMatrix(n, 1, band)


def relation_weights(counts: Sequence[int], top: int) -> tuple[int, ...]:
    """Band weights a_2..a_top from a count sequence c_2..c_top.

    ``counts[0]`` is c_2.  The weight with index j is
    sum over i of C(j-2, i-2) * c_i, for i = 2..j.
    """
    if len(counts) < top - 1:
        raise ValueError(
            f"count sequence too short: need c_2..c_{top}, got {len(counts)} values"
        )
    out = []
    for j in range(2, top + 1):
        out.append(sum(binomial(j - 2, i - 2) * counts[i - 2] for i in range(2, j + 1)))
    return tuple(out)


def build_relation_matrix(n: int, counts: Sequence[int]) -> HTMatrix:
    """n x n relation matrix from a count sequence c_2..c_n (counts[0] = c_2).

    Subdiagonal 1, zero main diagonal; the offset-m entry for m >= 1 is the
    weight a_{m+1} = sum_i C(m-1, i-2) c_i.  Fed with connected-graph totals
    it reproduces the plane-graph counts; with spanning-tree totals, forest
    counts; with spanning-path totals, counts of forests of paths.
    """
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    weights = relation_weights(counts, n) if n >= 2 else ()
    band = (0,) + weights
    return HTMatrix(n, 1, band)


@dataclass(frozen=True)
class RiordanTriple:
    """A proper Riordan transfer-matrix description (d(0), A, Z).

    ``a[0]`` is the subdiagonal value of the associated matrix, ``z`` its
    first row.  Properness requires a[0] != 0.
    """

    d0: int
    z: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self):
        if not self.a or self.a[0] == 0:
            raise ValueError("A-sequence must start with a nonzero value")


def build_from_riordan(t: RiordanTriple, n: int) -> HTMatrix:
    """n x n transfer matrix of a Riordan triple: row 0 from the Z-sequence,
    row i >= 1 the A-sequence shifted right by i-1."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    if len(t.a) < n or len(t.z) < n:
        raise ValueError(f"need at least {n} A- and Z-sequence values")
    row0 = tuple(t.z[:n])
    band = list(t.a[1:n]) + [0]
    band[n - 1] = row0[n - 1]
    if all(row0[j] == band[j] for j in range(n)):
        return HTMatrix(n, t.a[0], tuple(band))
    return HTMatrix(n, t.a[0], tuple(band), row0=row0)


def riordan_triple_of(m: HTMatrix, d0: int = 1) -> RiordanTriple:
    """Read the (d(0), A, Z) triple off a transfer matrix."""
    a = (m.sub,) + m.band[: m.size - 1]
    z = m.row(0)
    return RiordanTriple(d0, z, a)


@dataclass(frozen=True)
class GraphClassSpec:
    """A countable class: its matrix family, initial vector and start level."""

    name: str
    start_index: int
    initial_entries: tuple[int, ...]
    k: int | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.name not in CLASS_NAMES:
            raise ValueError(f"unknown class {self.name!r}")
        if self.name == KANGULATION and (self.k is None or self.k < 3):
            raise ValueError("k-angulations require k >= 3")
        if self.name == RELATION and self.weights is None:
            raise ValueError("relation class requires a count sequence")

    def build_matrix(self, size: int) -> HTMatrix:
        if self.name == KANGULATION:
            return build_k_angulation_matrix(self.k, size)
        if self.name == GEOMETRIC:
            return build_geometric_matrix(size)
        if self.name == CONNECTED:
            return build_connected_matrix(size)
        if self.name == PARTITION:
            return build_partition_matrix(size)
        return build_relation_matrix(size, self.weights)

    def initial_vector(self, size: int) -> CountVector:
        return CountVector(self.initial_entries, self.start_index).padded(size)


def k_angulation_class(k: int) -> GraphClassSpec:
    # one k-gon, root degree 0
    return GraphClassSpec(KANGULATION, 1, (1,), k=k)


def geometric_class() -> GraphClassSpec:
    return GraphClassSpec(GEOMETRIC, 2, (2,))


def connected_class() -> GraphClassSpec:
    return GraphClassSpec(CONNECTED, 2, (1,))


def partition_class() -> GraphClassSpec:
    return GraphClassSpec(PARTITION, 1, (0, 1))


def relation_class(counts: Sequence[int]) -> GraphClassSpec:
    return GraphClassSpec(RELATION, 1, (0, 1), weights=tuple(counts))


class LevelCount(NamedTuple):
    level: int
    vector: CountVector
    total: int


def iterate_counts(
    m: HTMatrix, initial: CountVector, n_max: int
) -> list[LevelCount]:
    """Iterate v -> m v from the initial vector up to level n_max."""
    v = initial.padded(m.size)
    out = [LevelCount(v.level, v, v.total)]
    while v.level < n_max:
        v = mat_vec(m, v)
        out.append(LevelCount(v.level, v, v.total))
    return out


def count_sequence(
    spec: GraphClassSpec, n_max: int, size: int | None = None
) -> list[LevelCount]:
    """Per-level count vectors and totals from the class's start level to n_max.

    The matrix is materialized at ``n_max + 2`` by default: the isolation
    degree of an n-vertex object can reach n, so its vector has a nonzero
    entry at index n+1.
    """
    if n_max < spec.start_index:
        raise ValueError("n_max must be at least the class start index")
    if size is None:
        size = n_max + 2
    return iterate_counts(spec.build_matrix(size), spec.initial_vector(size), n_max)


def k_angulation_total(k: int, r: int) -> int:
    """Number of k-angulations with r k-gons: C((k-1)r, r) / ((k-2)r + 1)."""
    if k < 3:
        raise ValueError("k-angulations require k >= 3")
    if r < 1:
        raise ValueError("r must be >= 1")
    return exact_div(binomial((k - 1) * r, r), (k - 2) * r + 1)


def connected_totals(n_max: int) -> tuple[int, ...]:
    """Connected plane graph totals c_2..c_n_max via matrix iteration."""
    rows = count_sequence(connected_class(), n_max)
    return tuple(row.total for row in rows)
