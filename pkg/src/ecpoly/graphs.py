"""Immutable labeled simple graphs and the predicates built on them.

A Graph stores a vertex count and a lexicographically sorted tuple of
edges (u, v) with u < v; the position of an edge in that tuple is its edge
index, and every bitmask in the package refers to edges by that index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeOutOfRange,
    LoopEdge,
    MalformedGraph6,
    UnsupportedSize,
    VertexOutOfRange,
)

GRAPH6_MAX_VERTICES = 62


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0 .. vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.vertex_count
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(lst) for lst in inc)

    @cached_property
    def incident_mask(self) -> tuple[int, ...]:
        """Bitmask over edge indices incident to each vertex."""
        masks = [0] * self.vertex_count
        for e, (u, v) in enumerate(self.edges):
            bit = 1 << e
            masks[u] |= bit
            masks[v] |= bit
        return tuple(masks)

    @cached_property
    def neighbor_mask(self) -> tuple[int, ...]:
        """Bitmask over vertices adjacent to each vertex."""
        rows = [0] * self.vertex_count
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(lst)) for lst in adj)


@dataclass(frozen=True)
class EdgeSubset:
    """Subset of the edges of some owning Graph, stored as a bitmask."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise EdgeOutOfRange("edge subset mask must be non-negative")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "EdgeSubset":
        mask = 0
        for e in indices:
            if e < 0:
                raise EdgeOutOfRange(f"edge index {e} is negative")
            mask |= 1 << e
        return cls(mask)

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def indices(self) -> tuple[int, ...]:
        out = []
        mask = self.mask
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)


def build_graph(vertex_count: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate and normalize an edge list into a Graph.

    Pairs may come in any order and orientation; the result stores each
    edge as (min, max) in a sorted tuple.
    """
    if vertex_count < 0:
        raise VertexOutOfRange(f"vertex count {vertex_count} is negative")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for pair in pairs:
        u, v = pair
        if u == v:
            raise LoopEdge(f"loop edge ({u}, {v})")
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise VertexOutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) appears more than once")
        seen.add(key)
        edges.append(key)
    edges.sort()
    return Graph(vertex_count, tuple(edges))


def delete_edge(graph: Graph, e: int) -> Graph:
    """Remove edge index e; the vertex set is unchanged."""
    if not (0 <= e < graph.edge_count):
        raise EdgeOutOfRange(f"edge index {e} not in [0, {graph.edge_count})")
    return Graph(graph.vertex_count, graph.edges[:e] + graph.edges[e + 1 :])


def delete_vertex(graph: Graph, v: int) -> Graph:
    """Remove vertex v and its incident edges; higher labels shift down."""
    if not (0 <= v < graph.vertex_count):
        raise VertexOutOfRange(f"vertex {v} not in [0, {graph.vertex_count})")
    edges = []
    for a, b in graph.edges:
        if a == v or b == v:
            continue
        edges.append((a - (a > v), b - (b > v)))
    edges.sort()
    return Graph(graph.vertex_count - 1, tuple(edges))


def is_connected(graph: Graph) -> bool:
    """True iff the graph has a single component; empty and K_1 count."""
    n = graph.vertex_count
    if n <= 1:
        return True
    adj = graph.neighbors
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                stack.append(w)
    return reached == n


def _single_component(graph: Graph, mask: int) -> bool:
    """True iff (V, S) with S = edges in mask has exactly one component."""
    n = graph.vertex_count
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    components = n
    edges = graph.edges
    while mask:
        low = mask & -mask
        mask ^= low
        u, v = edges[low.bit_length() - 1]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
            if components == 1:
                return True
    return components == 1


def covered_and_connected(graph: Graph, subset: EdgeSubset) -> bool:
    """True iff the subset is a connected edge cover set of the graph.

    Every vertex must be incident to a subset edge, and the spanning
    subgraph (V, S) must be connected.
    """
    mask = subset.mask
    if mask >> graph.edge_count:
        raise EdgeOutOfRange("edge subset has bits beyond the graph's edge count")
    if graph.vertex_count == 0:
        return True
    for inc in graph.incident_mask:
        if not inc & mask:
            return False
    return _single_component(graph, mask)


# -- graph6 codec --------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string."""
    s = text.strip()
    if not s:
        raise MalformedGraph6("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise UnsupportedSize("long-form graph6 (n > 62) is not supported")
    if not (63 <= first <= 63 + GRAPH6_MAX_VERTICES):
        raise MalformedGraph6(f"size character {s[0]!r} out of range")
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    data = s[1:]
    if len(data) != nbytes:
        raise MalformedGraph6(f"expected {nbytes} data characters for n={n}, got {len(data)}")
    values = []
    for ch in data:
        b = ord(ch)
        if not (63 <= b <= 126):
            raise MalformedGraph6(f"data character {ch!r} out of range")
        values.append(b - 63)
    bits = []
    for val in values:
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return build_graph(n, edges)


def write_graph6(graph: Graph) -> str:
    """Encode as short-form graph6, bit for bit."""
    n = graph.vertex_count
    if n > GRAPH6_MAX_VERTICES:
        raise UnsupportedSize(f"graph6 short form caps at {GRAPH6_MAX_VERTICES} vertices, got {n}")
    rows = graph.neighbor_mask
    out = [chr(63 + n)]
    acc = 0
    width = 0
    for v in range(1, n):
        row = rows[v]
        for u in range(v):
            acc = (acc << 1) | ((row >> u) & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = 0
                width = 0
    if width:
        out.append(chr(63 + (acc << (6 - width))))
    return "".join(out)


# -- canonical labeling --------------------------------------------------


def relabel_graph(graph: Graph, new_labels: Sequence[int]) -> Graph:
    """Apply a permutation: vertex v becomes new_labels[v]."""
    n = graph.vertex_count
    if len(new_labels) != n or sorted(new_labels) != list(range(n)):
        raise VertexOutOfRange(f"relabeling is not a permutation of 0..{n - 1}")
    edges = []
    for u, v in graph.edges:
        a, b = new_labels[u], new_labels[v]
        edges.append((a, b) if a < b else (b, a))
    edges.sort()
    return Graph(n, tuple(edges))


def _canonical_order(graph: Graph) -> tuple[int, ...]:
    """Vertex order whose relabeling maximizes the graph6 bit string.

    Branch and bound over partial orders. The certificate grows one
    adjacency column per placed vertex, so prefixes can be compared
    against the best complete certificate found so far. Candidates tied
    by a swap automorphism are explored once.
    """
    n = graph.vertex_count
    if n <= 1:
        return tuple(range(n))
    rows = graph.neighbor_mask
    heur = sorted(range(n), key=lambda v: (-graph.degrees[v], v))
    rank = [0] * n
    for i, v in enumerate(heur):
        rank[v] = i

    best_cols: list[int] | None = None
    best_perm: list[int] = []
    perm: list[int] = []
    cols: list[int] = []
    placed = 0

    def dfs(k: int) -> None:
        nonlocal best_cols, best_perm, placed
        if k == n:
            if best_cols is None or cols > best_cols:
                best_cols = cols.copy()
                best_perm = perm.copy()
            return
        cands = []
        for v in range(n):
            if (placed >> v) & 1:
                continue
            col = 0
            for p in perm:
                col = (col << 1) | ((rows[p] >> v) & 1)
            cands.append((v, col))
        cands.sort(key=lambda t: (-t[1], rank[t[0]]))
        tried: list[int] = []
        for v, col in cands:
            # A descendant may have raised the bar mid-loop, so compare
            # the running prefix against the best certificate fresh.
            if best_cols is not None:
                verdict = 0
                for i in range(k):
                    if cols[i] != best_cols[i]:
                        verdict = -1 if cols[i] < best_cols[i] else 1
                        break
                if verdict < 0:
                    return
                if verdict == 0 and col < best_cols[k]:
                    break  # candidates are sorted, the rest only get smaller
            rv = rows[v]
            if any(rows[u] & ~(1 << v) == rv & ~(1 << u) for u in tried):
                continue  # swapping u and v is an automorphism
            tried.append(v)
            perm.append(v)
            cols.append(col)
            placed |= 1 << v
            dfs(k + 1)
            perm.pop()
            cols.pop()
            placed &= ~(1 << v)

    dfs(0)
    return tuple(best_perm)


def canonical_graph(graph: Graph) -> Graph:
    """Isomorphism-invariant relabeling of the graph."""
    order = _canonical_order(graph)
    new_labels = [0] * graph.vertex_count
    for position, v in enumerate(order):
        new_labels[v] = position
    return relabel_graph(graph, new_labels)


def canonicalize(graph: Graph) -> str:
    """Canonical string: graph6 of the canonical relabeling.

    Equal exactly for isomorphic graphs, so the string doubles as a
    dictionary key for memo caches and catalog deduplication.
    """
    return write_graph6(canonical_graph(graph))


def is_isomorphic(left: Graph, right: Graph) -> bool:
    if left.vertex_count != right.vertex_count or left.edge_count != right.edge_count:
        return False
    if sorted(left.degrees) != sorted(right.degrees):
        return False
    return canonicalize(left) == canonicalize(right)
