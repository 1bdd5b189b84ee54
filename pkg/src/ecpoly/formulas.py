"""Closed-form polynomial evaluators and polynomial statistics.

Every formula here is evaluated exactly as stated by its source, with
no corrections; where a formula is wrong, the verification harness is
the place that says so. The evaluators therefore may disagree with the
oracle, and several do.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import BadParameters, ZeroPolynomial
from .families import complete_graph
from .oracle import DEFAULT_CONFIG, OracleConfig, edge_cover_polynomial
from .polynomials import IntPolynomial


def formula_path(n: int) -> IntPolynomial:
    """x^(n-1): the unique connected cover of a path is all of it."""
    if n < 2:
        raise BadParameters(f"path formula needs n >= 2, got {n}")
    return IntPolynomial.from_terms({n - 1: 1})


def formula_cycle(n: int) -> IntPolynomial:
    """n x^(n-1) + x^n: drop at most one cycle edge."""
    if n < 3:
        raise BadParameters(f"cycle formula needs n >= 3, got {n}")
    return IntPolynomial.from_terms({i: comb(n, i) for i in (n - 1, n)})


def formula_complete(n: int, cfg: OracleConfig = DEFAULT_CONFIG) -> IntPolynomial:
    """Plain cover polynomial of K_n minus its stated low-order slice.

    The subtracted range is ceil(n/2) .. n-2; sizes n-1 and up are kept
    as plain cover counts, connected or not.
    """
    if n < 3:
        raise BadParameters(f"complete graph formula needs n >= 3, got {n}")
    plain = edge_cover_polynomial(complete_graph(n), cfg)
    drop = IntPolynomial.from_terms(
        {i: plain.coefficient(i) for i in range((n + 1) // 2, n - 1)}
    )
    return plain.add(drop.scale(-1))


def formula_friendship(n: int, m: int) -> IntPolynomial:
    """Sum of C(n,i) m^i x^(mn-i) over i = 0..n."""
    if n < 1 or m < 3:
        raise BadParameters(f"friendship formula needs n >= 1 and m >= 3, got {n},{m}")
    return IntPolynomial.from_terms({m * n - i: comb(n, i) * m**i for i in range(n + 1)})


def formula_corona_complete(n: int) -> IntPolynomial:
    """Stated coefficient table for the pendant corona of K_n:
    C(n(n-1)/2, i-n) - n C(n-1, i-n) over 2n-1 <= i <= n + n(n-1)/2."""
    if n < 3:
        raise BadParameters(f"corona table needs n >= 3, got {n}")
    inner = n * (n - 1) // 2
    return IntPolynomial.from_terms(
        {i: comb(inner, i - n) - n * comb(n - 1, i - n) for i in range(2 * n - 1, n + inner + 1)}
    )


def formula_path_step(n: int) -> IntPolynomial:
    """Step identity x * E_c(P_{n-1}), with the closed form as input."""
    if n < 3:
        raise BadParameters(f"path step identity needs n >= 3, got {n}")
    return formula_path(n - 1).shift(1)


def formula_cycle_step(n: int) -> IntPolynomial:
    """Step identity x * E_c(C_{n-1}) + x^(n-1), closed form as input."""
    if n < 4:
        raise BadParameters(f"cycle step identity needs n >= 4, got {n}")
    return formula_cycle(n - 1).shift(1).add(IntPolynomial.from_terms({n - 1: 1}))


_FORMULAS = {
    "path": (formula_path, 1),
    "cycle": (formula_cycle, 1),
    "friendship": (formula_friendship, 2),
    "corona_complete": (formula_corona_complete, 1),
    "path_rec": (formula_path_step, 1),
    "cycle_rec": (formula_cycle_step, 1),
}


def formula_eval(kind: str, params: tuple[int, ...], cfg: OracleConfig = DEFAULT_CONFIG) -> IntPolynomial:
    """Dispatch on formula kind; parameters are validated per formula."""
    if kind == "complete":
        if len(params) != 1:
            raise BadParameters(f"formula 'complete' takes 1 parameter, got {len(params)}")
        return formula_complete(params[0], cfg)
    entry = _FORMULAS.get(kind)
    if entry is None:
        raise BadParameters(f"unknown formula kind {kind!r}")
    func, arity = entry
    if len(params) != arity:
        raise BadParameters(f"formula {kind!r} takes {arity} parameter(s), got {len(params)}")
    return func(*params)


@dataclass(frozen=True)
class PolyStats:
    """Shape summary of a cover polynomial.

    i0 is the least index from which every coefficient up to size_m
    equals the full binomial C(size_m, i); delta = size_m - i0 + 1 is
    the minimum degree that the binomial-tail statement would imply.
    Both are None when even the leading coefficient falls short. delta
    is a statistic read off the polynomial, not the graph; the two can
    differ, which is exactly what the verification harness records for
    bridged graphs.
    """

    size_m: int
    rho_c: int
    i0: Optional[int]
    delta: Optional[int]


def poly_stats(p: IntPolynomial) -> PolyStats:
    if p.is_zero():
        raise ZeroPolynomial("statistics are undefined for the zero polynomial")
    m = p.degree()
    i0 = None
    for i in range(m, -1, -1):
        if p.coefficient(i) != comb(m, i):
            break
        i0 = i
    return PolyStats(
        size_m=m,
        rho_c=p.min_support(),
        i0=i0,
        delta=None if i0 is None else m - i0 + 1,
    )
