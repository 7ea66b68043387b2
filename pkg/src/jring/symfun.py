"""Symmetric polynomials in k_1, ..., k_l and the e -> m transition matrix.

For fixed degree n and length l we expand each product
e^beta = e_1^{beta_1} ... e_l^{beta_l} over the monomial symmetric basis
m_lambda and invert the (unitriangular) expansion by integer
back-substitution.  The columns of the inverse M, defined by
m_lambda = sum_beta M[lambda][beta] e^beta, are the coefficient vectors of
the invariant basis polynomials.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Protocol

from .combinatorics import (
    Composition,
    Partition,
    enumerate_compositions,
    enumerate_partitions,
    is_composition,
    leading_partition,
    weight,
)


def _elementary_poly(j: int, ell: int) -> dict[tuple[int, ...], int]:
    # e_j in ell variables as {exponent vector: coefficient}
    out: dict[tuple[int, ...], int] = {}

    def rec(start: int, left: int, acc: list[int]):
        if left == 0:
            vec = [0] * ell
            for i in acc:
                vec[i] = 1
            out[tuple(vec)] = 1
            return
        for i in range(start, ell - left + 1):
            rec(i + 1, left - 1, acc + [i])

    rec(0, j, [])
    return out


def _poly_mul(
    a: dict[tuple[int, ...], int], b: dict[tuple[int, ...], int]
) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            out[key] = out.get(key, 0) + va * vb
    return out


def expand_elementary_product(beta: Composition, ell: int) -> dict[Partition, int]:
    """Coefficients of e^beta over the m_lambda basis in ell variables.

    Works by explicit dense-exponent multiplication; since e^beta is
    symmetric, the coefficient of m_lambda is the coefficient of the single
    monomial k^lambda.  The e_l^{beta_l} factor is divided out first (it just
    shifts every exponent), so every lambda that appears has exactly ell
    parts.
    """
    if not is_composition(beta) or len(beta) != ell or ell < 1:
        raise ValueError(f"{beta} is not a valid index of length {ell}")
    shift = beta[-1]
    prod: dict[tuple[int, ...], int] = {(0,) * ell: 1}
    for j in range(1, ell):
        ej = _elementary_poly(j, ell)
        for _ in range(beta[j - 1]):
            prod = _poly_mul(prod, ej)
    out: dict[Partition, int] = {}
    for vec, c in prod.items():
        shifted = tuple(e + shift for e in vec)
        if all(shifted[i] >= shifted[i + 1] for i in range(ell - 1)):
            out[shifted] = c
    return out


@dataclass
class TransitionMatrix:
    """Integer matrix M with m_lambda = sum_beta M[lambda][beta] e^beta."""

    n: int
    ell: int
    partitions: list[Partition]
    compositions: list[Composition]
    # entries[(lambda, beta)] -> int, zero entries omitted
    entries: dict[tuple[Partition, Composition], int] = field(repr=False)

    def entry(self, lam: Partition, beta: Composition) -> int:
        return self.entries.get((lam, beta), 0)

    def g_column(self, beta: Composition) -> dict[Partition, int]:
        """Coefficients of the invariant polynomial labelled by beta."""
        return {
            lam: self.entries[(lam, beta)]
            for lam in self.partitions
            if (lam, beta) in self.entries
        }

    def solve_g_coefficients(
        self, vector: dict[Partition, Fraction]
    ) -> dict[Composition, Fraction]:
        """Express an x-coefficient vector over the g_beta column basis.

        Solves M c = v by back substitution: the column at beta is unit at
        the leading partition of beta and otherwise supported on dominance-
        larger partitions, so starting from the dominance-smallest lead the
        solution is exact and unique.
        """
        remaining = dict(vector)
        coeffs: dict[Composition, Fraction] = {}
        for beta in reversed(self.compositions):
            lead = leading_partition(beta)
            c = remaining.get(lead, Fraction(0))
            if c != 0:
                coeffs[beta] = c
                for lam, m in self.g_column(beta).items():
                    newval = remaining.get(lam, Fraction(0)) - c * m
                    if newval == 0:
                        remaining.pop(lam, None)
                    else:
                        remaining[lam] = newval
        if remaining:
            raise ValueError("vector is not in the span of the g basis")
        return coeffs


class CacheBackend(Protocol):
    def load(self, n: int, ell: int) -> Optional["TransitionMatrix"]: ...

    def store(self, tm: "TransitionMatrix") -> None: ...


_memo: dict[tuple[int, int], TransitionMatrix] = {}
_memo_lock = threading.Lock()
_cache_backend: Optional[CacheBackend] = None


def set_cache_backend(backend: Optional[CacheBackend]) -> None:
    """Install an external (e.g. on-disk) cache consulted before computing."""
    global _cache_backend
    _cache_backend = backend


def _build_transition_matrix(n: int, ell: int) -> TransitionMatrix:
    partitions = enumerate_partitions(n, ell)
    compositions = enumerate_compositions(n, ell)
    if len(partitions) != len(compositions):
        raise RuntimeError(f"index sets out of sync at (n={n}, ell={ell})")
    expansions = {
        beta: expand_elementary_product(beta, ell) for beta in compositions
    }
    pos = {lam: i for i, lam in enumerate(partitions)}
    lead_of = {beta: leading_partition(beta) for beta in compositions}

    # unitriangularity check: e^beta = m_{lead} + lower-dominance terms
    for beta, exp in expansions.items():
        lead = lead_of[beta]
        if exp.get(lead) != 1:
            raise RuntimeError(f"expansion of {beta} has no unit leading term")
        for lam in exp:
            if pos[lam] < pos[lead]:
                raise RuntimeError(
                    f"expansion of {beta} is not triangular at {lam}"
                )

    beta_of = {lead_of[beta]: beta for beta in compositions}
    # back-substitute from the dominance-smallest partition upwards
    m_expr: dict[Partition, dict[Composition, int]] = {}
    for lam in reversed(partitions):
        beta = beta_of[lam]
        expr: dict[Composition, int] = {beta: 1}
        for mu, c in expansions[beta].items():
            if mu == lam:
                continue
            for b2, c2 in m_expr[mu].items():
                expr[b2] = expr.get(b2, 0) - c * c2
        m_expr[lam] = {b: c for b, c in expr.items() if c != 0}

    entries = {
        (lam, beta): c
        for lam, expr in m_expr.items()
        for beta, c in expr.items()
    }
    return TransitionMatrix(n, ell, partitions, compositions, entries)


def transition_matrix(n: int, ell: int) -> TransitionMatrix:
    """Memoized transition matrix for (n, ell); n >= ell >= 1 required."""
    if not n >= ell >= 1:
        raise ValueError("transition_matrix requires n >= ell >= 1")
    key = (n, ell)
    tm = _memo.get(key)
    if tm is not None:
        return tm
    if _cache_backend is not None:
        tm = _cache_backend.load(n, ell)
    if tm is None:
        tm = _build_transition_matrix(n, ell)
        if _cache_backend is not None:
            _cache_backend.store(tm)
    with _memo_lock:
        # first writer wins so every reader sees one fully built value
        return _memo.setdefault(key, tm)


def waring_coefficient(beta: Composition) -> int:
    """Closed form for the coefficient of x_omega in g_beta.

    omega = (n - l + 1, 1, ..., 1) is the dominance-largest partition; the
    coefficient never vanishes, and equals 1 exactly when n = l.
    """
    if not is_composition(beta) or len(beta) < 1:
        raise ValueError(f"{beta} is not a valid index")
    ell = len(beta)
    n = weight(beta)
    if n == ell:
        return 1
    s = sum(beta)
    even_sum = sum(beta[i] for i in range(1, ell, 2))
    sign = (-1) ** (ell + 1 + even_sum)
    value = (
        Fraction(n - ell, s - 1)
        * Fraction(math.factorial(s - 1))
        / math.prod(math.factorial(b) for b in beta)
        * beta[-1]
        * sign
    )
    if value.denominator != 1:
        raise RuntimeError(f"Waring coefficient for {beta} is not an integer")
    return int(value)
