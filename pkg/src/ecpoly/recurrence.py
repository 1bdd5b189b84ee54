"""Edge deletion recurrence for connected edge cover polynomials.

The rule expands a graph through one edge uv into three subproblems:

    R(G) = (x + 1) R(G without the edge uv)
         + x R(G without vertex v)
         + x R(G without vertex u)

R is computed faithfully under fixed base cases, but it does NOT always
equal the enumerated polynomial: deleting a bridge of a cover leaves a
disconnected subgraph the rule silently drops. Callers must compare R
against the oracle instead of assuming equality; recurrence_scan does
exactly that, edge by edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import RecursionDepthExceeded
from .graphs import Graph, canonicalize, delete_edge, delete_vertex, is_connected
from .oracle import DEFAULT_CONFIG, OracleConfig, connected_edge_cover_polynomial
from .polynomials import ONE, X, ZERO, IntPolynomial, times_x_plus_one

EdgeSelector = Callable[[Graph], int]


def lowest_min_degree_edge(graph: Graph) -> int:
    """Default edge choice: the first edge at the smallest-labeled vertex
    of minimum degree. Pendant edges get picked first, which keeps the
    rule in step with the oracle on trees."""
    degs = graph.degrees
    v = min(range(graph.vertex_count), key=lambda u: (degs[u], u))
    return graph.incident_edges[v][0]


@dataclass(frozen=True)
class RecurrenceTrace:
    """One expansion step with its three subcall results."""

    canonical: str
    edge: tuple[int, int]
    without_edge: IntPolynomial
    without_tail: IntPolynomial  # graph minus the higher endpoint v
    without_head: IntPolynomial  # graph minus the lower endpoint u
    combined: IntPolynomial


def _base_case(graph: Graph) -> "IntPolynomial | None":
    if graph.vertex_count == 0:
        return ONE
    if 0 in graph.degrees:
        return ZERO
    if not is_connected(graph):
        return ZERO
    if graph.vertex_count == 2:
        return X  # a single edge
    return None


def recurrence_ec(
    graph: Graph,
    selector: "EdgeSelector | None" = None,
    memo: "Optional[dict[str, IntPolynomial]]" = None,
) -> IntPolynomial:
    """Value of the deletion recurrence under the fixed base cases.

    Base cases: empty graph 1, isolated vertex present 0, disconnected 0,
    single edge x. The memo is keyed by canonical string, so isomorphic
    subproblems are solved once; pass a shared dict to reuse work across
    calls with the same selector.
    """
    if selector is None:
        selector = lowest_min_degree_edge
    if memo is None:
        memo = {}
    # each expansion removes an edge or a vertex, so depth is bounded by
    # n + m; the guard only trips on a broken selector
    limit = graph.vertex_count + graph.edge_count + 2

    def rec(g: Graph, depth: int) -> IntPolynomial:
        if depth > limit:
            raise RecursionDepthExceeded(f"recurrence depth exceeded {limit}")
        base = _base_case(g)
        if base is not None:
            return base
        key = canonicalize(g)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = _expand(g, selector(g), rec, depth)
        memo[key] = value
        return value

    return rec(graph, 0)


def _expand(
    graph: Graph,
    e: int,
    rec: Callable[[Graph, int], IntPolynomial],
    depth: int,
) -> IntPolynomial:
    u, v = graph.edges[e]
    minus_edge = rec(delete_edge(graph, e), depth + 1)
    minus_v = rec(delete_vertex(graph, v), depth + 1)
    minus_u = rec(delete_vertex(graph, u), depth + 1)
    return times_x_plus_one(minus_edge).add(minus_v.shift(1)).add(minus_u.shift(1))


def expand_edge(
    graph: Graph,
    e: int,
    selector: "EdgeSelector | None" = None,
    memo: "Optional[dict[str, IntPolynomial]]" = None,
) -> RecurrenceTrace:
    """Expand through one chosen first-level edge; subcalls use the
    default machinery."""
    u, v = graph.edges[e]
    minus_edge = recurrence_ec(delete_edge(graph, e), selector, memo)
    minus_v = recurrence_ec(delete_vertex(graph, v), selector, memo)
    minus_u = recurrence_ec(delete_vertex(graph, u), selector, memo)
    combined = times_x_plus_one(minus_edge).add(minus_v.shift(1)).add(minus_u.shift(1))
    return RecurrenceTrace(
        canonical=canonicalize(graph),
        edge=(u, v),
        without_edge=minus_edge,
        without_tail=minus_v,
        without_head=minus_u,
        combined=combined,
    )


@dataclass(frozen=True)
class EdgeScanEntry:
    edge_index: int
    edge: tuple[int, int]
    recurrence: IntPolynomial
    oracle: IntPolynomial
    equal: bool


def recurrence_scan(graph: Graph, cfg: OracleConfig = DEFAULT_CONFIG) -> tuple[EdgeScanEntry, ...]:
    """Check the recurrence against the oracle once per first-level edge.

    The oracle value raises SizeCapExceeded past the configured cap; the
    recurrence itself has no size limit.
    """
    truth = connected_edge_cover_polynomial(graph, cfg)
    memo: dict[str, IntPolynomial] = {}
    entries = []
    for e in range(graph.edge_count):
        trace = expand_edge(graph, e, memo=memo)
        entries.append(
            EdgeScanEntry(
                edge_index=e,
                edge=trace.edge,
                recurrence=trace.combined,
                oracle=truth,
                equal=trace.combined == truth,
            )
        )
    return tuple(entries)
