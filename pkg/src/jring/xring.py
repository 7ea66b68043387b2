"""The ambient ring Q[x_1, x_2, ...] with exact sparse arithmetic.

A monomial x_{l_1} x_{l_2} ... is keyed by its partition (l_1 >= l_2 >= ...),
so commutativity is built into the representation.  deg(x_i) = i; the degree
of a term is the weight of its partition, the length is its number of parts.
Coefficients are exact rationals (Fraction), so the same type carries both
the integral basis polynomials and the exp-style lifts with denominators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .combinatorics import Partition

Coeff = Union[int, Fraction]


class XPolynomial:
    """Sparse polynomial: map from monomial partition to nonzero rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Partition, Coeff]] = None):
        clean: dict[Partition, Fraction] = {}
        if terms:
            for lam, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    key = tuple(sorted(lam, reverse=True))
                    if any(p < 1 for p in key):
                        raise ValueError(f"bad monomial index {lam}")
                    clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "XPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "XPolynomial":
        return cls({(): 1})

    @classmethod
    def variable(cls, i: int) -> "XPolynomial":
        return cls({(i,): 1})

    @classmethod
    def monomial(cls, lam: Iterable[int], coeff: Coeff = 1) -> "XPolynomial":
        return cls({tuple(lam): coeff})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "XPolynomial") -> "XPolynomial":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return XPolynomial(out)

    def __sub__(self, other: "XPolynomial") -> "XPolynomial":
        return self + (-other)

    def __neg__(self) -> "XPolynomial":
        return XPolynomial({lam: -c for lam, c in self.terms.items()})

    def __mul__(self, other: "XPolynomial") -> "XPolynomial":
        out: dict[Partition, Fraction] = {}
        for lam1, c1 in self.terms.items():
            for lam2, c2 in other.terms.items():
                key = tuple(sorted(lam1 + lam2, reverse=True))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return XPolynomial(out)

    def scale(self, c: Coeff) -> "XPolynomial":
        c = Fraction(c)
        return XPolynomial({lam: c * v for lam, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(sorted(lam, reverse=True)), Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def max_degree(self) -> int:
        return max((sum(lam) for lam in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms by increasing degree then increasing lex on the partition."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if self.is_zero():
            return "XPolynomial(0)"
        bits = []
        for lam, c in self.sorted_terms():
            mono = "*".join(f"x{p}" for p in reversed(lam)) or "1"
            bits.append(f"{c}*{mono}")
        return "XPolynomial(" + " + ".join(bits) + ")"


def multiply(p: XPolynomial, q: XPolynomial) -> XPolynomial:
    return p * q


def derivation_d(p: XPolynomial) -> XPolynomial:
    """Leibniz extension of d x_1 = 0, d x_i = x_{i-1}; lowers degree by 1."""
    out: dict[Partition, Fraction] = {}
    for lam, c in p.terms.items():
        for idx in range(len(lam)):
            if lam[idx] >= 2 and (idx == 0 or lam[idx - 1] != lam[idx]):
                mult = sum(1 for q in lam if q == lam[idx])
                key = tuple(
                    sorted(lam[:idx] + (lam[idx] - 1,) + lam[idx + 1:], reverse=True)
                )
                out[key] = out.get(key, Fraction(0)) + mult * c
    return XPolynomial(out)


def derivation_delta(p: XPolynomial) -> XPolynomial:
    """Leibniz extension of delta x_i = i x_{i+1}; raises degree by 1."""
    out: dict[Partition, Fraction] = {}
    for lam, c in p.terms.items():
        for idx in range(len(lam)):
            if idx == 0 or lam[idx - 1] != lam[idx]:
                mult = sum(1 for q in lam if q == lam[idx])
                key = tuple(
                    sorted(lam[:idx] + (lam[idx] + 1,) + lam[idx + 1:], reverse=True)
                )
                out[key] = out.get(key, Fraction(0)) + mult * lam[idx] * c
    return XPolynomial(out)


def project(p: XPolynomial, n: int, ell: Optional[int] = None) -> XPolynomial:
    """Sum of the terms of degree exactly n (and length exactly ell, if given)."""
    out = {
        lam: c
        for lam, c in p.terms.items()
        if sum(lam) == n and (ell is None or len(lam) == ell)
    }
    return XPolynomial(out)


def truncate(p: XPolynomial, n: int) -> XPolynomial:
    """Drop all terms of degree > n."""
    return XPolynomial({lam: c for lam, c in p.terms.items() if sum(lam) <= n})
