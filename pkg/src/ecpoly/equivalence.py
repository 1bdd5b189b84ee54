"""Grouping graphs by equality of their connected edge cover polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SizeCapExceeded
from .graphs import Graph, canonicalize, write_graph6
from .oracle import DEFAULT_CONFIG, OracleConfig, connected_edge_cover_polynomial
from .polynomials import IntPolynomial


@dataclass(frozen=True)
class EquivalenceScan:
    """Partition of the scanned graphs by exact polynomial equality.

    equivalent_pairs lists, per class, every two members that share the
    polynomial without being isomorphic; skipped holds graphs past the
    oracle's edge cap.
    """

    classes: tuple[tuple[Graph, ...], ...]
    polynomials: tuple[IntPolynomial, ...]
    equivalent_pairs: tuple[tuple[Graph, Graph], ...]
    skipped: tuple[Graph, ...]


def equivalence_classes(graphs: Iterable[Graph], cfg: OracleConfig = DEFAULT_CONFIG) -> EquivalenceScan:
    """Group graphs sharing one polynomial; deterministic ordering.

    Classes are sorted by their smallest member canonical string, and
    members within a class likewise; input order never matters.
    """
    by_poly: dict[tuple[int, ...], list[tuple[str, Graph]]] = {}
    skipped: list[tuple[str, Graph]] = []
    for graph in graphs:
        key = canonicalize(graph)
        try:
            poly = connected_edge_cover_polynomial(graph, cfg)
        except SizeCapExceeded:
            skipped.append((key, graph))
            continue
        by_poly.setdefault(poly.coeffs, []).append((key, graph))

    def member_key(entry: tuple[str, Graph]) -> tuple[str, str]:
        return entry[0], write_graph6(entry[1])

    ordered = sorted(
        ((sorted(members, key=member_key), coeffs) for coeffs, members in by_poly.items()),
        key=lambda item: [member_key(m) for m in item[0]],
    )
    classes = []
    polynomials = []
    pairs: list[tuple[Graph, Graph]] = []
    for members, coeffs in ordered:
        classes.append(tuple(g for _, g in members))
        polynomials.append(IntPolynomial(coeffs))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if members[i][0] != members[j][0]:  # not isomorphic
                    pairs.append((members[i][1], members[j][1]))
    skipped.sort(key=member_key)
    return EquivalenceScan(
        classes=tuple(classes),
        polynomials=tuple(polynomials),
        equivalent_pairs=tuple(pairs),
        skipped=tuple(g for _, g in skipped),
    )
