"""The invariant basis g_beta, structure constants, and lifts.

A JCombination is a finite integer linear combination of basis labels beta,
stored as a plain dict {Composition: int}.  The unit of the ring is the
empty label (): realize({(): 1}) == 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import symfun
from .combinatorics import (
    EMPTY,
    Composition,
    enumerate_compositions,
    is_composition,
    weight,
)
from .xring import XPolynomial, truncate

JCombination = dict[Composition, int]


def g_poly(beta: Composition) -> XPolynomial:
    """The invariant-ring basis polynomial labelled by beta.

    g_() = 1 and g_(1) = x_1; in general the column of the transition matrix
    at beta, an integer polynomial with unit leading coefficient at
    x_{conjugate partition}.
    """
    beta = tuple(beta)
    if not is_composition(beta):
        raise ValueError(f"{beta} is not a valid basis label")
    if beta == EMPTY:
        return XPolynomial.one()
    tm = symfun.transition_matrix(weight(beta), len(beta))
    return XPolynomial(tm.g_column(beta))


def realize(comb: JCombination) -> XPolynomial:
    """The polynomial sum(coeff * g_beta) denoted by a combination."""
    out = XPolynomial.zero()
    for beta, c in comb.items():
        out = out + g_poly(beta).scale(c)
    return out


def is_zero_supported(comb: JCombination) -> bool:
    """True iff every label lies in B(0), i.e. indexes a kernel basis element."""
    return all(_in_b0(beta) for beta in comb)


def _in_b0(beta: Composition) -> bool:
    if beta == EMPTY or beta == (1,):
        return True
    return len(beta) >= 2 and beta[0] == 0 and beta[-1] >= 1


@lru_cache(maxsize=None)
def _pair_expansion_table(
    n2: int, ell: int, ell2: int
) -> dict[Composition, dict[tuple[Composition, Composition], int]]:
    """For every beta'' in B_{n2}^{(ell+ell2)}: its expansion over pairs.

    Expands e^{beta''} in the union variable set via
    e_i(k, k') = sum_j e_j(k) e_{i-j}(k'), with e_j(k) = 0 for j > ell and
    e_j(k') = 0 for j > ell2, treating the one-set elementary polynomials as
    formal commuting indeterminates.
    """
    total = ell + ell2
    factors: list[list[tuple[int, int]]] = [[]]  # index i-1: (j, i-j) choices
    for i in range(1, total + 1):
        lo = max(0, i - ell2)
        hi = min(i, ell)
        factors.append([(j, i - j) for j in range(lo, hi + 1)])

    table: dict[Composition, dict[tuple[Composition, Composition], int]] = {}
    for beta2 in enumerate_compositions(n2, total):
        prod: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {
            ((0,) * ell, (0,) * ell2): 1
        }
        for i in range(1, total + 1):
            for _ in range(beta2[i - 1]):
                nxt: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
                for (a, b), c in prod.items():
                    for j, j2 in factors[i]:
                        na = list(a)
                        nb = list(b)
                        if j > 0:
                            na[j - 1] += 1
                        if j2 > 0:
                            nb[j2 - 1] += 1
                        key = (tuple(na), tuple(nb))
                        nxt[key] = nxt.get(key, 0) + c
                prod = nxt
        table[beta2] = prod
    return table


def structure_constants(
    beta: Composition, beta2: Composition
) -> dict[Composition, int]:
    """The multiplication table entry: g_beta * g_beta' = sum N * g_beta''.

    Every beta'' of length len(beta) + len(beta2) and weight
    weight(beta) + weight(beta2) contributing a nonzero (non-negative)
    coefficient is returned.
    """
    beta, beta2 = tuple(beta), tuple(beta2)
    if not (is_composition(beta) and is_composition(beta2)):
        raise ValueError("invalid basis labels")
    if beta == EMPTY:
        return {beta2: 1} if beta2 != EMPTY else {EMPTY: 1}
    if beta2 == EMPTY:
        return {beta: 1}
    n_total = weight(beta) + weight(beta2)
    table = _pair_expansion_table(n_total, len(beta), len(beta2))
    out: dict[Composition, int] = {}
    for b2, expansion in table.items():
        c = expansion.get((beta, beta2), 0)
        if c:
            out[b2] = c
    return out


def j_product(c1: JCombination, c2: JCombination) -> JCombination:
    """Bilinear product in the abstract ring presented on B(0) labels."""
    if not (is_zero_supported(c1) and is_zero_supported(c2)):
        raise ValueError("j_product operands must be supported on B(0)")
    out: JCombination = {}
    for b1, a1 in c1.items():
        for b2, a2 in c2.items():
            for b3, n in structure_constants(b1, b2).items():
                if not _in_b0(b3):
                    raise RuntimeError(
                        f"product of B(0) labels left B(0) at {b3}"
                    )
                val = out.get(b3, 0) + a1 * a2 * n
                if val == 0:
                    out.pop(b3, None)
                else:
                    out[b3] = val
    return out


def product_closed_form(a: int, b: int, c: Optional[int] = None) -> JCombination:
    """The displayed closed formulas for g_(0,a) g_(0,b) and g_(0,a) g_(0,b,c).

    Terms whose factorial arguments would be negative are omitted.
    """
    if a < 1 or b < 1 or (c is not None and c < 1):
        raise ValueError("closed product formulas need positive indices")
    out: JCombination = {}
    if c is None:
        for r in range(1, (a + b) // 2 + 1):
            if a - r < 0 or b - r < 0:
                continue
            coeff = math.factorial(a + b - 2 * r) // (
                math.factorial(a - r) * math.factorial(b - r)
            )
            key = (0, a + b - 2 * r, 0, r)
            out[key] = out.get(key, 0) + coeff
    else:
        for s in range(1, c + 1):
            for r in range(0, min(a - s, b) + 1):
                if a - r - s < 0 or b - r < 0 or a + b - 2 * r - s < 0:
                    continue
                coeff = math.factorial(a + b - 2 * r - s) // (
                    math.factorial(a - r - s) * math.factorial(b - r)
                )
                key = (0, a + b - 2 * r - s, c - s, r, s)
                out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v != 0}


# ---------------------------------------------------------------------------
# Chern character series


def elementary_symmetric_values(ks: Sequence[int]) -> list[int]:
    """[e_0, e_1, ..., e_l] evaluated at the numeric tuple ks."""
    es = [1] + [0] * len(ks)
    for k in ks:
        for j in range(len(es) - 1, 0, -1):
            es[j] += k * es[j - 1]
    return es


def e_power_value(beta: Composition, ks: Sequence[int]) -> int:
    es = elementary_symmetric_values(ks)
    return math.prod(es[j] ** b for j, b in enumerate(beta, start=1))


@dataclass
class ChSeries:
    """Degree-by-degree basis expansion of the length-l Chern character."""

    ell: int
    max_degree: int
    # cells[n][beta] = g_beta for beta in B_n^(l)
    cells: dict[int, dict[Composition, XPolynomial]]

    def specialize(self, ks: Sequence[int], n: int) -> XPolynomial:
        """Evaluate sum e^beta(ks) g_beta for the degree-n cell."""
        if len(ks) != self.ell:
            raise ValueError("need exactly ell numeric values")
        out = XPolynomial.zero()
        for beta, g in self.cells.get(n, {}).items():
            out = out + g.scale(e_power_value(beta, ks))
        return out


def ch_series(ell: int, max_degree: int) -> ChSeries:
    if ell < 1 or max_degree < ell:
        raise ValueError("need max_degree >= ell >= 1")
    cells = {
        n: {beta: g_poly(beta) for beta in enumerate_compositions(n, ell)}
        for n in range(ell, max_degree + 1)
    }
    return ChSeries(ell, max_degree, cells)


def ch_numeric(ks: Sequence[int], max_degree: int) -> XPolynomial:
    """Truncated product of the numeric power series sum_i k_j^i x_i."""
    if not ks or max_degree < 1:
        raise ValueError("need a nonempty k tuple and max_degree >= 1")
    out = XPolynomial.one()
    for k in ks:
        factor = XPolynomial(
            {(i,): k**i for i in range(1, max_degree + 1)}
        )
        out = truncate(out * factor, max_degree)
    return out


def chern_coefficients(
    ell: int, max_degree: int
) -> dict[tuple[int, ...], XPolynomial]:
    """The e_1 = 0 specialization: coefficient of e_2^{b2} ... e_l^{bl}.

    Keyed by the exponent vector (b2, ..., bl); the value is exactly the
    basis polynomial labelled (0, b2, ..., bl).
    """
    if ell < 2:
        raise ValueError("need ell >= 2")
    out: dict[tuple[int, ...], XPolynomial] = {}
    for n in range(ell, max_degree + 1):
        for beta in enumerate_compositions(n, ell, first=0):
            out[beta[1:]] = g_poly(beta)
    return out


# ---------------------------------------------------------------------------
# Lifts to twisted cohomology


def lift_tilde(beta: Composition, max_degree: int) -> XPolynomial:
    """The basis lift: sum over i of g_{(beta_1 + i, beta_2, ...)}.

    Truncated to total degree <= max_degree; the truncation F at N satisfies
    d(F) = F up to degree N - 1.
    """
    beta = tuple(beta)
    if not _in_b0(beta) or beta == EMPTY:
        raise ValueError("lift_tilde needs a nonempty B(0) label")
    n = weight(beta)
    if max_degree < n:
        raise ValueError("max_degree below the degree of the polynomial")
    out = XPolynomial.zero()
    for i in range(0, max_degree - n + 1):
        out = out + g_poly((beta[0] + i,) + beta[1:])
    return out


def lift_exp(f: XPolynomial, max_degree: int) -> XPolynomial:
    """The exponential lift of a homogeneous invariant polynomial f.

    Applies exp(delta / l) to each length-l component.  The commutator of
    the lowering and raising derivations is the length operator, so with
    this normalization the truncation F at degree N satisfies d(F) = F up
    to degree N - 1; any other divisor breaks the lift law whenever the
    length differs from the degree.
    """
    from .xring import XPolynomial as _XP
    from .xring import derivation_d, derivation_delta

    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("lift_exp needs a nonzero homogeneous polynomial")
    n = f.max_degree()
    if n < 1:
        raise ValueError("lift_exp needs positive degree")
    if not derivation_d(f).is_zero():
        raise ValueError("lift_exp needs an invariant polynomial (d f = 0)")
    out = XPolynomial.zero()
    lengths = {len(lam) for lam in f.terms}
    for ell in lengths:
        component = _XP(
            {lam: c for lam, c in f.terms.items() if len(lam) == ell}
        )
        term = component
        for i in range(0, max_degree - n + 1):
            if i > 0:
                term = derivation_delta(term)
            out = out + term.scale(Fraction(1, math.factorial(i) * ell**i))
    return out
