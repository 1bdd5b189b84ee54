"""Exact dense univariate polynomials with integer coefficients.

Coefficients are stored from degree zero upward with no trailing zeros, so
two polynomials are equal exactly when their coefficient tuples are equal.
All arithmetic is exact; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import MalformedPolynomialJson, ZeroPolynomial


def _as_int(value: object) -> int:
    # bool is an int subclass but never a legitimate coefficient
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"coefficient must be an int, got {value!r}")
    return value


class IntPolynomial:
    """Immutable polynomial over the integers."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        stored = [_as_int(c) for c in coeffs]
        while stored and stored[-1] == 0:
            stored.pop()
        object.__setattr__(self, "coeffs", tuple(stored))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "IntPolynomial":
        """Build from a degree -> coefficient mapping."""
        if not terms:
            return cls(())
        top = max(terms)
        if min(terms) < 0:
            raise ValueError("negative exponent")
        coeffs = [0] * (top + 1)
        for power, c in terms.items():
            coeffs[power] += _as_int(c)
        return cls(coeffs)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def min_support(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no minimum support")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError("unreachable: normalized nonzero polynomial")

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def evaluate(self, t: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    # -- arithmetic ------------------------------------------------------

    def add(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPolynomial(summed)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift amount must be non-negative")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def scale(self, c: int) -> "IntPolynomial":
        _as_int(c)
        if c == 0:
            return IntPolynomial(())
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    # -- serialization ---------------------------------------------------

    def to_text(self) -> str:
        """Canonical human form, terms in descending degree."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{' + ' if c > 0 else ' - '}{body}")
        return "".join(parts)

    def to_json(self) -> dict:
        if not self.coeffs:
            return {"min_degree": 0, "coeffs": []}
        j = self.min_support()
        return {"min_degree": j, "coeffs": list(self.coeffs[j:])}

    @classmethod
    def from_json(cls, record: object) -> "IntPolynomial":
        if not isinstance(record, dict):
            raise MalformedPolynomialJson(f"expected an object, got {type(record).__name__}")
        if set(record) != {"min_degree", "coeffs"}:
            raise MalformedPolynomialJson(f"expected keys min_degree and coeffs, got {sorted(record)}")
        j = record["min_degree"]
        coeffs = record["coeffs"]
        if isinstance(j, bool) or not isinstance(j, int) or j < 0:
            raise MalformedPolynomialJson(f"min_degree must be a non-negative integer, got {j!r}")
        if not isinstance(coeffs, list):
            raise MalformedPolynomialJson("coeffs must be a list")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise MalformedPolynomialJson(f"coefficient must be an integer, got {c!r}")
        return cls((0,) * j + tuple(coeffs))

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.to_text()


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def times_x_plus_one(p: IntPolynomial) -> IntPolynomial:
    """(x + 1) * p, the building block of the deletion recurrence."""
    return p.shift(1).add(p)
