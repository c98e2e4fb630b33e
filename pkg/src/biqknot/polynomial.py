"""Sparse polynomials in u with nonnegative integer exponents.

Both enhancements in this library (quiver in-degree distributions and
column group multisets) package a multiset of nonnegative integers as a
polynomial: elements become exponents, multiplicities coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class ExponentPolynomial:
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {int(e): int(c) for e, c in self.coeffs.items() if c}
        if any(e < 0 for e in cleaned) or any(c < 0 for c in cleaned.values()):
            raise ValueError("exponents and coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_multiset(cls, values) -> "ExponentPolynomial":
        return cls(dict(Counter(values)))

    def coefficient(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def total_mass(self) -> int:
        """Sum of coefficients (the multiset cardinality)."""
        return sum(self.coeffs.values())

    def weighted_mass(self) -> int:
        """Sum of coefficient * exponent (for in-degrees: the edge count)."""
        return sum(c * e for e, c in self.coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, ExponentPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append(f"{c}u" if c != 1 else "u")
            else:
                terms.append(f"{c}u^{e}" if c != 1 else f"u^{e}")
        return " + ".join(terms)

    @classmethod
    def parse(cls, text: str) -> "ExponentPolynomial":
        """Inverse of str(): e.g. '54u^18 + 18u^6 + 9u^2' or '12 + 4u^4'."""
        coeffs: Counter = Counter()
        text = text.strip()
        if text in ("", "0"):
            return cls({})
        for term in text.split("+"):
            term = term.strip().replace(" ", "")
            if "u" not in term:
                coeffs[0] += int(term)
                continue
            head, _, tail = term.partition("u")
            c = int(head) if head else 1
            e = int(tail[1:]) if tail.startswith("^") else (1 if tail == "" else None)
            if e is None:
                raise ValueError(f"bad term {term!r}")
            coeffs[e] += c
        return cls(dict(coeffs))
