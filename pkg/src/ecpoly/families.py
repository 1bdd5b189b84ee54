"""Deterministic graph family constructors and small-graph catalogs.

Family labelings are fixed so that identical parameters always produce
the identical labeled graph: paths and cycles run 0..n-1 in order, the
friendship hub is vertex 0, corona pendants are appended after the base
labels, and the Petersen graph uses outer cycle 0-4, inner pentagram 5-9,
spokes i to i+5.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameters, SizeCapExceeded
from .graphs import Graph, build_graph, canonicalize, is_connected, parse_graph6

REGULAR_ENUM_CAP = 12
CONNECTED_ENUM_CAP = 7


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic name of a family graph plus its parameters."""

    kind: str
    params: tuple[int, ...] = ()
    base: "Graph | None" = None


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameters(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParameters(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameters(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, list(itertools.combinations(range(n), 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameters(f"complete bipartite graph needs both parts >= 1, got {a},{b}")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def friendship_graph(n: int, m: int) -> Graph:
    """n cycles of length m sharing exactly the hub vertex 0."""
    if n < 1 or m < 3:
        raise BadParameters(f"friendship graph needs n >= 1 and m >= 3, got {n},{m}")
    edges = []
    for i in range(n):
        base = 1 + i * (m - 1)
        chain = [0] + [base + j for j in range(m - 1)] + [0]
        edges.extend(zip(chain, chain[1:]))
    return build_graph(1 + n * (m - 1), edges)


def corona_k1(base: Graph) -> Graph:
    """One new pendant vertex hung on every vertex of the base graph."""
    n = base.vertex_count
    if n < 1:
        raise BadParameters("corona base graph must have at least one vertex")
    edges = list(base.edges) + [(v, n + v) for v in range(n)]
    return build_graph(2 * n, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def circular_ladder_graph(k: int) -> Graph:
    """Prism: two k-cycles joined by rungs i to k+i."""
    if k < 3:
        raise BadParameters(f"circular ladder needs k >= 3, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return build_graph(2 * k, edges)


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "friendship": 2,
    "corona_k1": 0,
    "petersen": 0,
    "circular_ladder": 1,
}


def make_family(spec: FamilySpec) -> Graph:
    if spec.kind not in _ARITY:
        raise BadParameters(f"unknown family kind {spec.kind!r}")
    if len(spec.params) != _ARITY[spec.kind]:
        raise BadParameters(
            f"family {spec.kind!r} takes {_ARITY[spec.kind]} parameters, got {len(spec.params)}"
        )
    if (spec.base is not None) != (spec.kind == "corona_k1"):
        raise BadParameters("base graph is required for corona_k1 and only for corona_k1")
    if spec.kind == "path":
        return path_graph(*spec.params)
    if spec.kind == "cycle":
        return cycle_graph(*spec.params)
    if spec.kind == "complete":
        return complete_graph(*spec.params)
    if spec.kind == "complete_bipartite":
        return complete_bipartite_graph(*spec.params)
    if spec.kind == "friendship":
        return friendship_graph(*spec.params)
    if spec.kind == "corona_k1":
        assert spec.base is not None
        return corona_k1(spec.base)
    if spec.kind == "petersen":
        return petersen_graph()
    return circular_ladder_graph(*spec.params)


# -- text grammar for the command line -----------------------------------

_SIMPLE_SPECS = [
    (re.compile(r"Kb(\d+),(\d+)\Z"), "complete_bipartite"),
    (re.compile(r"F(\d+),(\d+)\Z"), "friendship"),
    (re.compile(r"P(\d+)\Z"), "path"),
    (re.compile(r"C(\d+)\Z"), "cycle"),
    (re.compile(r"K(\d+)\Z"), "complete"),
    (re.compile(r"prism(\d+)\Z"), "circular_ladder"),
]
_CORONA = re.compile(r"corona\((.+)\)\Z")


def parse_family_text(text: str) -> "FamilySpec | None":
    """Parse a family spec like P7, Kb3,3 or corona(K4); None if no match."""
    if text == "petersen":
        return FamilySpec("petersen")
    match = _CORONA.fullmatch(text)
    if match is not None:
        inner = parse_family_text(match.group(1))
        if inner is None:
            return None
        return FamilySpec("corona_k1", base=make_family(inner))
    for pattern, kind in _SIMPLE_SPECS:
        match = pattern.fullmatch(text)
        if match is not None:
            return FamilySpec(kind, tuple(int(g) for g in match.groups()))
    return None


# -- exhaustive catalogs -------------------------------------------------


def _rows_connected(rows: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= rows[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _rows_fingerprint(rows: list[int], n: int) -> tuple:
    """Cheap isomorphism-invariant signature used to bucket search leaves.

    Collisions between distinct classes only cost extra isomorphism
    tests; they can never merge classes, because new representatives are
    still deduplicated by exact canonical string.
    """
    profile = []
    for v in range(n):
        rv = rows[v]
        levels = []
        seen = frontier = 1 << v
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nxt |= rows[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
            levels.append(frontier.bit_count())
        tri = []
        rest = rv
        while rest:
            low = rest & -rest
            rest ^= low
            tri.append((rows[low.bit_length() - 1] & rv).bit_count())
        tri.sort()
        profile.append((tuple(levels), tuple(tri)))
    profile.sort()
    return tuple(profile)


def _rows_isomorphic(rows_a: list[int], rows_b: list[int], n: int) -> bool:
    """Exact search for one isomorphism between two connected graphs."""
    deg_a = [r.bit_count() for r in rows_a]
    deg_b = [r.bit_count() for r in rows_b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    # breadth-first vertex order: each later vertex has a mapped neighbor
    order = [0]
    seen = 1
    for v in order:
        rest = rows_a[v] & ~seen
        seen |= rest
        while rest:
            low = rest & -rest
            rest ^= low
            order.append(low.bit_length() - 1)
    mapping = [-1] * n

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        req = 0
        rest = rows_a[v]
        while rest:
            low = rest & -rest
            rest ^= low
            img = mapping[low.bit_length() - 1]
            if img >= 0:
                req |= 1 << img
        dv = deg_a[v]
        for w in range(n):
            if (used >> w) & 1 or deg_b[w] != dv:
                continue
            if rows_b[w] & used != req:
                continue
            mapping[v] = w
            if extend(i + 1, used | (1 << w)):
                return True
            mapping[v] = -1
        return False

    return extend(0, 0)


@lru_cache(maxsize=None)
def enumerate_connected_regular(n: int, k: int) -> tuple[Graph, ...]:
    """All connected k-regular graphs on n vertices, one per isomorphism
    class, ordered by canonical string.

    Backtracking assigns each vertex its neighbors among higher labels.
    Vertex 0's neighborhood is pinned to {1..k}, which every isomorphism
    class can realize, so no class is lost and the search shrinks by a
    factor of roughly C(n-1, k). Leaves are deduplicated through
    fingerprint buckets holding one representative per class seen so far;
    only new representatives pay for a full canonicalization.
    """
    if n < 1 or k < 0 or k >= n:
        raise BadParameters(f"no simple {k}-regular graph on {n} vertices")
    if n * k % 2 != 0:
        raise BadParameters(f"degree sum would be odd for n={n}, k={k}")
    if n > REGULAR_ENUM_CAP:
        raise SizeCapExceeded(f"regular enumeration caps at n={REGULAR_ENUM_CAP}, got {n}")
    if k == 0:
        return (build_graph(1, []),) if n == 1 else ()

    remaining = [k] * n
    edges: list[tuple[int, int]] = []
    buckets: dict[tuple, list[list[int]]] = {}
    found: set[str] = set()

    def feasible(after: int) -> bool:
        pending = [remaining[u] for u in range(after + 1, n) if remaining[u] > 0]
        if sum(pending) % 2 != 0:
            return False
        return all(r <= len(pending) - 1 for r in pending)

    def record_leaf() -> None:
        rows = [0] * n
        for a, b in edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        if not _rows_connected(rows, n):
            return
        bucket = buckets.setdefault(_rows_fingerprint(rows, n), [])
        if any(_rows_isomorphic(rows, rep, n) for rep in bucket):
            return
        # edges were appended with v ascending, so they are already sorted
        canon = canonicalize(Graph(n, tuple(edges)))
        if canon not in found:
            found.add(canon)
            bucket.append(rows)

    def assign(v: int) -> None:
        if v == n:
            record_leaf()
            return
        need = remaining[v]
        if need == 0:
            assign(v + 1)
            return
        if v == 0:
            choices: "list[tuple[int, ...]]" = [tuple(range(1, k + 1))]
        else:
            touched = []
            untouched = []
            for u in range(v + 1, n):
                if remaining[u] == k:
                    untouched.append(u)
                elif remaining[u] > 0:
                    touched.append(u)
            if len(touched) + len(untouched) < need:
                return
            # vertices with no edges yet are interchangeable, so a choice
            # among them may as well take the lowest-indexed ones
            choices = []
            for fresh in range(min(need, len(untouched)) + 1):
                prefix = tuple(untouched[:fresh])
                for combo in itertools.combinations(touched, need - fresh):
                    choices.append(tuple(sorted(combo + prefix)))
        for ups in choices:
            remaining[v] = 0
            for u in ups:
                remaining[u] -= 1
                edges.append((v, u))
            if feasible(v):
                assign(v + 1)
            for u in ups:
                remaining[u] += 1
                edges.pop()
            remaining[v] = need

    assign(0)
    return tuple(parse_graph6(s) for s in sorted(found))


@lru_cache(maxsize=None)
def enumerate_connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices up to isomorphism, ordered by
    canonical string.

    Grown by augmentation: every connected graph on n vertices arises
    from a connected graph on n-1 vertices by attaching the new vertex
    to a nonempty subset (remove any leaf of a spanning tree to see why).
    """
    if n < 1:
        raise BadParameters(f"vertex count must be positive, got {n}")
    if n > CONNECTED_ENUM_CAP:
        raise SizeCapExceeded(f"connected enumeration caps at n={CONNECTED_ENUM_CAP}, got {n}")
    if n == 1:
        return (build_graph(1, []),)
    found: set[str] = set()
    for parent in enumerate_connected_graphs(n - 1):
        base_edges = list(parent.edges)
        for bits in range(1, 1 << (n - 1)):
            extra = [(u, n - 1) for u in range(n - 1) if (bits >> u) & 1]
            found.add(canonicalize(Graph(n, tuple(base_edges + extra))))
    return tuple(parse_graph6(s) for s in sorted(found))
