"""Claim registry: reported values checked against the enumeration oracle.

Each claim pairs a claimed value (a closed form evaluated verbatim, or a
literal reported constant) with an independently computed value, and the
status is nothing more than string equality of the two renderings:

* polynomials render via to_text();
* integers as decimal strings;
* multisets as "[a, b, c]" ascending, polynomial multisets as sorted
  texts joined with "; ";
* universally quantified checks as "true"/"false".

A claim whose evaluation trips the oracle's edge cap reports
NOT_APPLICABLE instead of a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Mapping

from .errors import SizeCapExceeded, UnknownClaim
from .families import (
    circular_ladder_graph,
    complete_bipartite_graph,
    complete_graph,
    corona_k1,
    cycle_graph,
    enumerate_connected_graphs,
    enumerate_connected_regular,
    friendship_graph,
    path_graph,
    petersen_graph,
)
from .formulas import (
    formula_complete,
    formula_corona_complete,
    formula_cycle,
    formula_cycle_step,
    formula_friendship,
    formula_path,
    formula_path_step,
    poly_stats,
)
from .graphs import Graph, build_graph, canonicalize
from .oracle import DEFAULT_CONFIG, OracleConfig, connected_edge_cover_polynomial
from .polynomials import IntPolynomial
from .recurrence import recurrence_scan

AGREE = "AGREE"
DISAGREE = "DISAGREE"
NOT_APPLICABLE = "NOT_APPLICABLE"

Evaluator = Callable[[OracleConfig], "tuple[str, str]"]


@dataclass(frozen=True)
class Claim:
    claim_id: str
    source: str
    evaluate: Evaluator


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    source: str
    claimed: str
    computed: str
    status: str


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple[ClaimResult, ...]

    def has_disagreement(self) -> bool:
        return any(e.status == DISAGREE for e in self.entries)


def _oracle_text(graph: Graph, cfg: OracleConfig) -> str:
    return connected_edge_cover_polynomial(graph, cfg).to_text()


def _bridged_triangles() -> Graph:
    """Two triangles joined by a bridge: n=6, m=7, minimum degree 2."""
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


def _printed_order6_poly() -> IntPolynomial:
    # transcribed term by term, including the duplicated degree-9 term
    base = IntPolynomial.from_terms({9: 1, 8: comb(9, 8), 7: comb(9, 7), 6: comb(9, 6)})
    return base.add(IntPolynomial.from_terms({9: 81}))


def _printed_order8_polys() -> list[IntPolynomial]:
    # transcribed term by term; the degree-10 coefficient is C(12,7) as
    # printed, and the five entries share everything but the two lowest
    def make(ten: int, nine: int, eight: int, seven: int) -> IntPolynomial:
        return IntPolynomial.from_terms(
            {12: 1, 11: comb(12, 11), 10: ten, 9: nine, 8: eight, 7: seven}
        )

    g1 = make(comb(12, 7) - 1, comb(12, 9) - 6, comb(12, 8) - 6, 324)
    g2 = make(comb(12, 7), comb(12, 9), comb(12, 8) - 2, 338)
    g34 = make(comb(12, 7), comb(12, 9), comb(12, 8) - 4, 332)
    g5 = make(comb(12, 7), comb(12, 9), comb(12, 8), 344)
    return [g1, g2, g34, g34, g5]


def _small_connected_corpus() -> list[Graph]:
    corpus: list[Graph] = []
    for n in range(2, 6):
        corpus.extend(enumerate_connected_graphs(n))
    return corpus


def _claims() -> list[Claim]:
    claims: list[Claim] = []

    def add(claim_id: str, source: str, evaluate: Evaluator) -> None:
        claims.append(Claim(claim_id, source, evaluate))

    # -- closed forms against the oracle --------------------------------

    for n in range(5, 10):
        add(
            f"path_n{n}",
            f"closed form: path on {n} vertices",
            lambda cfg, n=n: (formula_path(n).to_text(), _oracle_text(path_graph(n), cfg)),
        )
    for n in range(3, 10):
        add(
            f"cycle_n{n}",
            f"closed form: cycle on {n} vertices",
            lambda cfg, n=n: (formula_cycle(n).to_text(), _oracle_text(cycle_graph(n), cfg)),
        )
    for n in range(3, 9):
        add(
            f"path_rec_n{n}",
            f"step identity: path on {n} vertices from the path one shorter",
            lambda cfg, n=n: (formula_path_step(n).to_text(), _oracle_text(path_graph(n), cfg)),
        )
    for n in range(4, 10):
        add(
            f"cycle_rec_n{n}",
            f"step identity: cycle on {n} vertices from the cycle one shorter",
            lambda cfg, n=n: (formula_cycle_step(n).to_text(), _oracle_text(cycle_graph(n), cfg)),
        )
    for n, m in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3)]:
        add(
            f"friendship_{n}_{m}",
            f"closed form: {n} cycle(s) of length {m} sharing a hub",
            lambda cfg, n=n, m=m: (
                formula_friendship(n, m).to_text(),
                _oracle_text(friendship_graph(n, m), cfg),
            ),
        )
    for n in range(3, 7):
        add(
            f"complete_n{n}",
            f"closed form: complete graph on {n} vertices from plain covers",
            lambda cfg, n=n: (
                formula_complete(n, cfg).to_text(),
                _oracle_text(complete_graph(n), cfg),
            ),
        )

    # -- pendant corona --------------------------------------------------

    for name, base in [("p3", path_graph(3)), ("c4", cycle_graph(4)), ("k4", complete_graph(4))]:
        add(
            f"corona_rho_{name}",
            f"pendant corona minimum support is 2n-1: base {name.upper()}",
            lambda cfg, base=base: (
                str(2 * base.vertex_count - 1),
                str(connected_edge_cover_polynomial(corona_k1(base), cfg).min_support()),
            ),
        )
    for n in range(3, 6):
        add(
            f"corona_complete_n{n}",
            f"pendant corona of the complete graph on {n} vertices: binomial difference table",
            lambda cfg, n=n: (
                formula_corona_complete(n).to_text(),
                _oracle_text(corona_k1(complete_graph(n)), cfg),
            ),
        )

    # -- cubic catalogs --------------------------------------------------

    add(
        "cubic6_count",
        "catalog size: connected cubic graphs on 6 vertices",
        lambda cfg: ("2", str(len(enumerate_connected_regular(6, 3)))),
    )
    add(
        "cubic8_count",
        "catalog size: connected cubic graphs on 8 vertices",
        lambda cfg: ("5", str(len(enumerate_connected_regular(8, 3)))),
    )

    def cubic10_total(cfg: OracleConfig) -> tuple[str, str]:
        connected = len(enumerate_connected_regular(10, 3))
        # a disconnected cubic graph on 10 vertices splits 4 + 6; no
        # other part sizes admit cubic components
        split = len(enumerate_connected_regular(4, 3)) * len(enumerate_connected_regular(6, 3))
        return "21", str(connected + split)

    add(
        "cubic10_total",
        "catalog size: cubic graphs on 10 vertices, connected or not",
        cubic10_total,
    )
    add(
        "cubic6_min_k33",
        "reported minimum coefficient: order-6 cubic, complete bipartite",
        lambda cfg: (
            "81",
            str(connected_edge_cover_polynomial(complete_bipartite_graph(3, 3), cfg).coefficient(5)),
        ),
    )
    add(
        "cubic6_min_prism",
        "reported minimum coefficient: order-6 cubic, prism",
        lambda cfg: (
            "81",
            str(connected_edge_cover_polynomial(circular_ladder_graph(3), cfg).coefficient(5)),
        ),
    )
    add(
        "cubic6_poly_k33",
        "reported polynomial, literal transcription: order-6 cubic, complete bipartite",
        lambda cfg: (
            _printed_order6_poly().to_text(),
            _oracle_text(complete_bipartite_graph(3, 3), cfg),
        ),
    )
    add(
        "cubic6_poly_prism",
        "reported polynomial, literal transcription: order-6 cubic, prism",
        lambda cfg: (
            _printed_order6_poly().to_text(),
            _oracle_text(circular_ladder_graph(3), cfg),
        ),
    )

    def cubic8_min_multiset(cfg: OracleConfig) -> tuple[str, str]:
        computed = sorted(
            connected_edge_cover_polynomial(g, cfg).coefficient(7)
            for g in enumerate_connected_regular(8, 3)
        )
        return str(sorted([324, 338, 332, 332, 344])), str(computed)

    add(
        "cubic8_min_multiset",
        "reported minimum coefficients: the five order-8 cubics, compared as a multiset",
        cubic8_min_multiset,
    )

    def cubic8_poly_multiset(cfg: OracleConfig) -> tuple[str, str]:
        claimed = sorted(p.to_text() for p in _printed_order8_polys())
        computed = sorted(
            _oracle_text(g, cfg) for g in enumerate_connected_regular(8, 3)
        )
        return "; ".join(claimed), "; ".join(computed)

    add(
        "cubic8_poly_multiset",
        "reported polynomials, literal transcription: the five order-8 cubics as a multiset",
        cubic8_poly_multiset,
    )

    # -- Petersen --------------------------------------------------------

    add(
        "petersen_9",
        "reported count of size-9 connected covers of the Petersen graph",
        lambda cfg: (
            "235",
            str(connected_edge_cover_polynomial(petersen_graph(), cfg).coefficient(9)),
        ),
    )

    # -- polynomial statistics ------------------------------------------

    for name, make, true_delta in [
        ("c4", lambda: cycle_graph(4), 2),
        ("p5", lambda: path_graph(5), 1),
        ("petersen", petersen_graph, 3),
        ("bridge", _bridged_triangles, 2),
    ]:
        add(
            f"stats_delta_{name}",
            f"minimum degree recovered from the polynomial tail: {name}",
            lambda cfg, make=make, d=true_delta: (
                str(d),
                str(poly_stats(connected_edge_cover_polynomial(make(), cfg)).delta),
            ),
        )

    def suffix_check(make: Callable[[], Graph], true_delta: int) -> Evaluator:
        def ev(cfg: OracleConfig) -> tuple[str, str]:
            graph = make()
            poly = connected_edge_cover_polynomial(graph, cfg)
            m = poly.degree()
            tail = range(m - true_delta + 1, m + 1)
            return (
                str([comb(m, i) for i in tail]),
                str([poly.coefficient(i) for i in tail]),
            )

        return ev

    add(
        "stats_suffix_c4",
        "binomial coefficient tail for sizes above m minus minimum degree: C4",
        suffix_check(lambda: cycle_graph(4), 2),
    )
    add(
        "stats_suffix_bridge",
        "binomial coefficient tail for sizes above m minus minimum degree: bridged triangles",
        suffix_check(_bridged_triangles, 2),
    )

    def monic_small(cfg: OracleConfig) -> tuple[str, str]:
        ok = all(
            (p := connected_edge_cover_polynomial(g, cfg)).degree() == g.edge_count
            and p.coefficient(g.edge_count) == 1
            for g in _small_connected_corpus()
        )
        return "true", "true" if ok else "false"

    add(
        "stats_monic_small",
        "monic of degree m over every connected graph on 2..5 vertices",
        monic_small,
    )

    def rho_small(cfg: OracleConfig) -> tuple[str, str]:
        ok = all(
            connected_edge_cover_polynomial(g, cfg).min_support() == g.vertex_count - 1
            for g in _small_connected_corpus()
        )
        return "true", "true" if ok else "false"

    add(
        "stats_rho_small",
        "minimum support equals n-1 over every connected graph on 2..5 vertices",
        rho_small,
    )

    # -- uniqueness and equivalence -------------------------------------

    for n in range(3, 7):
        def unique_kn(cfg: OracleConfig, n: int = n) -> tuple[str, str]:
            target = connected_edge_cover_polynomial(complete_graph(n), cfg)
            hits = sum(
                1
                for g in enumerate_connected_graphs(n)
                if connected_edge_cover_polynomial(g, cfg) == target
            )
            return "1", str(hits)

        add(
            f"unique_k{n}",
            f"only the complete graph on {n} vertices attains its polynomial",
            unique_kn,
        )

    def tree_pair(cfg: OracleConfig) -> tuple[str, str]:
        p4 = path_graph(4)
        star = complete_bipartite_graph(1, 3)
        same_poly = connected_edge_cover_polynomial(p4, cfg) == connected_edge_cover_polynomial(star, cfg)
        distinct = canonicalize(p4) != canonicalize(star)
        return "true", "true" if same_poly and distinct else "false"

    add(
        "tree_pair_p4_star",
        "path and star on 4 vertices: equal polynomials, not isomorphic",
        tree_pair,
    )

    # -- recurrence validity --------------------------------------------

    for name, make in [
        ("c3", lambda: cycle_graph(3)),
        ("c4", lambda: cycle_graph(4)),
        ("p4", lambda: path_graph(4)),
    ]:
        add(
            f"recurrence_{name}",
            f"edge deletion recurrence matches the oracle on every edge: {name.upper()}",
            lambda cfg, make=make: (
                "true",
                "true" if all(e.equal for e in recurrence_scan(make(), cfg)) else "false",
            ),
        )

    return claims


_REGISTRY: "dict[str, Claim]" = {c.claim_id: c for c in _claims()}

SUITES: "Mapping[str, tuple[str, ...]]" = {
    "formulas": tuple(
        sorted(
            c
            for c in _REGISTRY
            if c.split("_n")[0] in {"path", "cycle", "path_rec", "cycle_rec", "complete"}
            or c.startswith("friendship_")
        )
    ),
    "corona": tuple(sorted(c for c in _REGISTRY if c.startswith("corona_"))),
    "cubic": tuple(sorted(c for c in _REGISTRY if c.startswith("cubic"))),
    "petersen": ("petersen_9",),
    "stats": tuple(sorted(c for c in _REGISTRY if c.startswith("stats_"))),
    "uniqueness": tuple(sorted(c for c in _REGISTRY if c.startswith("unique_") or c.startswith("tree_pair"))),
    "recurrence": tuple(sorted(c for c in _REGISTRY if c.startswith("recurrence_"))),
    "paper-all": tuple(sorted(_REGISTRY)),
}


def all_claim_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def suite_claims(name: str) -> tuple[str, ...]:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownClaim(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}") from None


def verify_claims(claim_ids: Iterable[str], cfg: OracleConfig = DEFAULT_CONFIG) -> VerificationReport:
    """Evaluate the given claims and report AGREE/DISAGREE per claim.

    Entries come back sorted by claim id regardless of input order, so a
    report is byte-stable for a fixed claim set and configuration.
    """
    entries = []
    for claim_id in claim_ids:
        claim = _REGISTRY.get(claim_id)
        if claim is None:
            raise UnknownClaim(f"unknown claim {claim_id!r}")
        try:
            claimed, computed = claim.evaluate(cfg)
            status = AGREE if claimed == computed else DISAGREE
        except SizeCapExceeded:
            claimed = computed = "n/a"
            status = NOT_APPLICABLE
        entries.append(ClaimResult(claim.claim_id, claim.source, claimed, computed, status))
    entries.sort(key=lambda e: e.claim_id)
    return VerificationReport(entries=tuple(entries))
