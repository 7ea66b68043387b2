from fractions import Fraction

import pytest

from jring.analysis import (
    dimension_table,
    evaluate_monomial,
    find_relations,
    g_expansion,
    generator_candidates,
    in_span,
    kernel_basis,
    nullspace,
    poincare_series,
    poincare_series_bivariate,
    relation_in_span,
    rref,
)
from jring.combinatorics import enumerate_compositions
from jring.invariants import g_poly, realize
from jring.xring import XPolynomial, derivation_d

from appendix_data import (
    DIMENSION_ROWS,
    LENGTH_SERIES_PREFIXES,
    RELATION_A,
    RELATION_B,
    TOTAL_SERIES_24,
)


# ---------------------------------------------------------------------------
# exact linear algebra


def F(rows):
    return [[Fraction(x) for x in row] for row in rows]


def test_rref_examples():
    red, pivots = rref(F([[2, 4], [1, 2]]))
    assert red == F([[1, 2]])
    assert pivots == [0]
    red, pivots = rref(F([[0, 1], [1, 0]]))
    assert red == F([[1, 0], [0, 1]])
    assert pivots == [0, 1]


def test_nullspace_solves():
    rows = F([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_in_span():
    basis = F([[1, 0, 1], [0, 1, 1]])
    assert in_span(F([[2, 3, 5]])[0], basis)
    assert not in_span(F([[1, 1, 1]])[0], basis)
    assert in_span([Fraction(0)] * 3, [])


# ---------------------------------------------------------------------------
# kernel of the derivation


def test_kernel_basis_examples():
    basis = kernel_basis(4, 2)
    assert len(basis) == 1
    # proportional to x_2^2 - 2 x_1 x_3 (the normalization is the echelon
    # form's, not the basis polynomial's)
    p = basis[0]
    ratio = Fraction(p.coefficient((2, 2)), 1)
    assert p == XPolynomial({(2, 2): 1, (3, 1): -2}).scale(ratio)
    assert kernel_basis(2, 1) == []
    assert kernel_basis(1, 1) == [XPolynomial.variable(1)]


def test_kernel_basis_is_in_the_kernel():
    for n in range(1, 11):
        for ell in range(1, n + 1):
            for p in kernel_basis(n, ell):
                assert derivation_d(p).is_zero()
                assert p.is_integral()


def test_kernel_basis_spans_the_invariant_slice():
    # each g_beta with beta in B_n^(l)(0) expands over the kernel basis
    for n in range(1, 9):
        for ell in range(1, n + 1):
            basis = kernel_basis(n, ell)
            labels = enumerate_compositions(n, ell, first=0)
            assert len(basis) == len(labels)
            if not basis:
                continue
            keys = sorted({lam for p in basis for lam in p.terms})
            rows = [
                [Fraction(p.coefficient(lam)) for lam in keys] for p in basis
            ]
            for beta in labels:
                g = g_poly(beta)
                vec = [Fraction(g.coefficient(lam)) for lam in keys]
                assert in_span(vec, rows)


def test_g_expansion_round_trip():
    p = g_poly((0, 2)).scale(3) - g_poly((2, 1)).scale(5)
    assert g_expansion(p, 4, 2) == {(0, 2): 3, (2, 1): -5}


# ---------------------------------------------------------------------------
# dimensions and series


def test_dimension_table_matches_published_rows():
    table = dimension_table(16)
    for n, (row, total) in DIMENSION_ROWS.items():
        assert table.dims[n] == row
        assert table.totals[n] == total


def test_total_series():
    coeffs = poincare_series(24)
    assert coeffs == TOTAL_SERIES_24


def test_total_series_matches_dimension_totals():
    table = dimension_table(12)
    coeffs = poincare_series(12)
    for n in range(1, 13):
        assert coeffs[n] == table.totals[n]


def test_single_length_series_prefixes():
    for ell, prefix in LENGTH_SERIES_PREFIXES.items():
        coeffs = poincare_series(len(prefix) - 1, ell)
        assert coeffs == prefix


def test_single_length_series_matches_cell_dimensions():
    table = dimension_table(12)
    for ell in range(1, 8):
        coeffs = poincare_series(12, ell)
        for n in range(1, 13):
            assert coeffs[n] == table.cell(n, ell)


def test_bivariate_series():
    rows = poincare_series_bivariate(12)
    table = dimension_table(12)
    for n in range(1, 13):
        for ell in range(1, n + 1):
            assert rows[n].get(ell, 0) == table.cell(n, ell)
    # setting the length variable to 1 recovers the total series
    total = poincare_series(12)
    for n in range(1, 13):
        assert sum(rows[n].values()) == total[n]


# ---------------------------------------------------------------------------
# generators and relations


def test_generator_candidates_through_degree_12():
    assert generator_candidates(12) == [
        (1,),
        (0, 2),
        (0, 3),
        (0, 0, 2),
        (0, 4),
        (0, 1, 2),
        (0, 0, 3),
        (0, 5),
        (0, 2, 2),
        (0, 1, 3),
        (0, 0, 1, 2),
        (0, 6),
        (0, 3, 2),
        (0, 0, 4),
    ]


def test_non_candidates_are_products():
    # (0,1,1) is dropped: its leading monomial is x_1 x_2^2 = lead of
    # g_(1) g_(0,2)
    assert (0, 1, 1) not in generator_candidates(5)


def test_evaluate_monomial():
    comb = evaluate_monomial(((1,), (1,)))
    assert comb == {(0, 1): 1}
    assert realize(evaluate_monomial(((0, 2), (0, 2)))) == g_poly(
        (0, 2)
    ) * g_poly((0, 2))


@pytest.mark.parametrize("degree", range(4, 12))
def test_no_relations_below_degree_twelve(degree):
    gens = generator_candidates(degree)
    assert find_relations(degree, gens) == []


def test_two_relations_in_degree_twelve():
    gens = generator_candidates(12)
    relations = find_relations(12, gens)
    assert len(relations) == 2
    for rel in (RELATION_A, RELATION_B):
        assert relation_in_span(rel, relations)
        # and the relation really evaluates to the zero polynomial
        total = XPolynomial.zero()
        for mono, c in rel.items():
            total = total + realize(evaluate_monomial(mono)).scale(c)
        assert total.is_zero()
