"""Ground-truth computation by exhaustive subset enumeration.

The polynomials here are produced the obvious way: walk every edge
subset, test it, count it. Nothing clever is allowed in this module;
its whole value is that the answer is trivially right. The only
independent check is the spanning-tree count, which goes through the
Laplacian instead of enumeration.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameters, SizeCapExceeded
from .graphs import Graph, is_connected
from .polynomials import ONE, ZERO, IntPolynomial

DEFAULT_MAX_EDGES = 28
_HARD_EDGE_CAP = 62
_PARALLEL_MIN_EDGES = 10


@dataclass(frozen=True)
class OracleConfig:
    """Resource knobs for the enumeration oracle."""

    max_edges: int = DEFAULT_MAX_EDGES
    workers: int = 1

    def __post_init__(self) -> None:
        if not (0 <= self.max_edges <= _HARD_EDGE_CAP):
            raise BadParameters(f"max_edges must lie in [0, {_HARD_EDGE_CAP}], got {self.max_edges}")
        if self.workers < 1:
            raise BadParameters(f"workers must be >= 1, got {self.workers}")


DEFAULT_CONFIG = OracleConfig()


def _cover_tables(graph: Graph) -> tuple[list[int], list[int], int, int]:
    """Coverage masks for low/high halves of an edge bitmask.

    cover(S) splits into one lookup per half, so the per-subset coverage
    test is two indexings and an OR.
    """
    m = graph.edge_count
    endpoint_bits = [(1 << u) | (1 << v) for u, v in graph.edges]
    half = m // 2
    low = [0] * (1 << half)
    for s in range(1, 1 << half):
        lowbit = s & -s
        low[s] = low[s ^ lowbit] | endpoint_bits[lowbit.bit_length() - 1]
    high = [0] * (1 << (m - half))
    for s in range(1, 1 << (m - half)):
        lowbit = s & -s
        high[s] = high[s ^ lowbit] | endpoint_bits[half + lowbit.bit_length() - 1]
    return low, high, half, (1 << graph.vertex_count) - 1


def _count_connected_covers(graph: Graph, start: int, stop: int) -> list[int]:
    """Connected-cover counts by size over subset masks in [start, stop).

    Ascending bitmask order; a subset survives the popcount and coverage
    filters before union-find decides connectivity of (V, S).
    """
    n = graph.vertex_count
    m = graph.edge_count
    need = n - 1
    low, high, half, full = _cover_tables(graph)
    lowmask = (1 << half) - 1
    heads = [u for u, _ in graph.edges]
    tails = [v for _, v in graph.edges]
    counts = [0] * (m + 1)
    base = list(range(n))
    for subset in range(start, stop):
        size = subset.bit_count()
        if size < need:
            continue
        if low[subset & lowmask] | high[subset >> half] != full:
            continue
        parent = base.copy()
        components = n
        t = subset
        while t:
            lowbit = t & -t
            t ^= lowbit
            e = lowbit.bit_length() - 1
            a = heads[e]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = tails[e]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a != b:
                parent[a] = b
                components -= 1
                if components == 1:
                    break
        if components == 1:
            counts[size] += 1
    return counts


@lru_cache(maxsize=None)
def _connected_counts_serial(graph: Graph) -> tuple[int, ...]:
    return tuple(_count_connected_covers(graph, 0, 1 << graph.edge_count))


@lru_cache(maxsize=32)
def _connected_counts_parallel(graph: Graph, workers: int) -> tuple[int, ...]:
    m = graph.edge_count
    prefix_bits = min(max(2, (4 * workers - 1).bit_length()), m - 4)
    span = 1 << (m - prefix_bits)
    chunks = [(graph, j * span, (j + 1) * span) for j in range(1 << prefix_bits)]
    with multiprocessing.get_context("fork").Pool(workers) as pool:
        partials = pool.starmap(_count_connected_covers, chunks, chunksize=1)
    totals = [0] * (m + 1)
    for part in partials:  # chunk order, not completion order
        for i, c in enumerate(part):
            totals[i] += c
    return tuple(totals)


def connected_edge_cover_polynomial(graph: Graph, cfg: OracleConfig = DEFAULT_CONFIG) -> IntPolynomial:
    """E_c by enumeration: coefficient i counts the connected edge cover
    sets of size i.

    Zero for a disconnected graph or one with an isolated vertex; the
    constant 1 for the empty graph.
    """
    m = graph.edge_count
    if m > cfg.max_edges:
        raise SizeCapExceeded(f"graph has {m} edges, cap is {cfg.max_edges}")
    if graph.vertex_count == 0:
        return ONE
    if 0 in graph.degrees:
        return ZERO
    if not is_connected(graph):
        return ZERO
    if cfg.workers > 1 and m >= _PARALLEL_MIN_EDGES:
        counts = _connected_counts_parallel(graph, cfg.workers)
    else:
        counts = _connected_counts_serial(graph)
    return IntPolynomial(counts)


@lru_cache(maxsize=None)
def _cover_counts(graph: Graph) -> tuple[int, ...]:
    m = graph.edge_count
    low, high, half, full = _cover_tables(graph)
    lowmask = (1 << half) - 1
    need = (graph.vertex_count + 1) // 2  # an edge covers at most two vertices
    counts = [0] * (m + 1)
    for subset in range(1 << m):
        size = subset.bit_count()
        if size < need:
            continue
        if low[subset & lowmask] | high[subset >> half] == full:
            counts[size] += 1
    return tuple(counts)


def edge_cover_polynomial(graph: Graph, cfg: OracleConfig = DEFAULT_CONFIG) -> IntPolynomial:
    """Plain edge cover polynomial: connectivity is not required."""
    if graph.edge_count > cfg.max_edges:
        raise SizeCapExceeded(f"graph has {graph.edge_count} edges, cap is {cfg.max_edges}")
    if graph.vertex_count == 0:
        return ONE
    if 0 in graph.degrees:
        return ZERO
    return IntPolynomial(_cover_counts(graph))


@lru_cache(maxsize=None)
def spanning_tree_count(graph: Graph) -> int:
    """Number of spanning trees via the matrix-tree theorem.

    Fraction-free Bareiss elimination keeps every intermediate value an
    exact integer; the result is the determinant of the Laplacian with
    the last row and column deleted.
    """
    n = graph.vertex_count
    if n <= 1:
        return 1
    size = n - 1
    minor = [[0] * size for _ in range(size)]
    for u, v in graph.edges:
        if u < size:
            minor[u][u] += 1
        if v < size:
            minor[v][v] += 1
        if u < size and v < size:
            minor[u][v] -= 1
            minor[v][u] -= 1
    sign = 1
    prev = 1
    for k in range(size):
        if minor[k][k] == 0:
            pivot = next((r for r in range(k + 1, size) if minor[r][k] != 0), None)
            if pivot is None:
                return 0
            minor[k], minor[pivot] = minor[pivot], minor[k]
            sign = -sign
        pk = minor[k][k]
        for i in range(k + 1, size):
            row_i = minor[i]
            row_k = minor[k]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pk - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * minor[size - 1][size - 1]
