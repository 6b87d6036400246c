"""Exact integer polynomials in t and truncated symmetric polynomials.

Everything is integer arithmetic; a TPoly is a coefficient tuple with
trailing zeros trimmed, a TruncatedSymPoly maps exponent vectors over a
fixed variable count to TPoly coefficients and supports reduction by
the ideal spanned by monomials with an exponent above a threshold.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class TPoly:
    coeffs: tuple[int, ...] = ()

    @staticmethod
    def of(coeffs: Iterable[int]) -> "TPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return TPoly(tuple(int(c) for c in cs))

    @staticmethod
    def monomial(power: int, coeff: int = 1) -> "TPoly":
        return TPoly.of([0] * power + [coeff])

    @staticmethod
    def from_powers(powers: Iterable[int]) -> "TPoly":
        out: list[int] = []
        for p in powers:
            if p >= len(out):
                out.extend([0] * (p + 1 - len(out)))
            out[p] += 1
        return TPoly.of(out)

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda t, i: t[i] if i < len(t) else 0
        return TPoly.of(get(self.coeffs, i) + get(other.coeffs, i) for i in range(n))

    def __mul__(self, other: "TPoly") -> "TPoly":
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TPoly.of(out)

    def __call__(self, t: int) -> int:
        return sum(c * t**i for i, c in enumerate(self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
                terms.append(f"{head}t^{i}" if i > 1 else f"{head}t")
        return " + ".join(terms)


@dataclass(frozen=True)
class TruncatedSymPoly:
    """Integer-coefficient polynomial in a fixed number of variables,
    graded by t, stored monomial by monomial."""

    variables: int
    terms: tuple[tuple[tuple[int, ...], TPoly], ...]

    @staticmethod
    def of(variables: int, mapping: Mapping[tuple[int, ...], TPoly]) -> "TruncatedSymPoly":
        items = []
        for expo, poly in mapping.items():
            if len(expo) != variables:
                raise ValueError(f"exponent {expo} does not match {variables} variables")
            if poly:
                items.append((tuple(int(e) for e in expo), poly))
        return TruncatedSymPoly(variables=variables, terms=tuple(sorted(items)))

    def as_dict(self) -> dict[tuple[int, ...], TPoly]:
        return dict(self.terms)

    def __add__(self, other: "TruncatedSymPoly") -> "TruncatedSymPoly":
        if self.variables != other.variables:
            raise ValueError("variable counts differ")
        acc = self.as_dict()
        for expo, poly in other.terms:
            acc[expo] = acc.get(expo, TPoly()) + poly
        return TruncatedSymPoly.of(self.variables, acc)

    def scale(self, poly: TPoly) -> "TruncatedSymPoly":
        return TruncatedSymPoly.of(
            self.variables, {expo: p * poly for expo, p in self.terms}
        )

    def reduce_mod(self, max_exponent: int) -> "TruncatedSymPoly":
        """Drop every monomial with an exponent above the threshold."""
        return TruncatedSymPoly.of(
            self.variables,
            {expo: p for expo, p in self.terms if max(expo, default=0) <= max_exponent},
        )

    def at_t(self, t: int) -> dict[tuple[int, ...], int]:
        return {expo: p(t) for expo, p in self.terms if p(t)}
