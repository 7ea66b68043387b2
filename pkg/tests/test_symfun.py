from fractions import Fraction

import pytest

from jring.combinatorics import (
    conjugate,
    dominance_leq,
    enumerate_compositions,
    leading_partition,
    to_partition,
    weight,
)
from jring.symfun import (
    expand_elementary_product,
    transition_matrix,
    waring_coefficient,
)


def test_expand_examples():
    assert expand_elementary_product((2, 1), 2) == {(3, 1): 1, (2, 2): 2}
    assert expand_elementary_product((0, 2), 2) == {(2, 2): 1}
    assert expand_elementary_product((1,), 1) == {(1,): 1}


def test_expansion_is_unitriangular():
    # e^beta = m_{lead(beta)} + terms strictly below in dominance
    for n in range(1, 13):
        for ell in range(1, n + 1):
            for beta in enumerate_compositions(n, ell):
                exp = expand_elementary_product(beta, ell)
                lead = leading_partition(beta)
                assert exp[lead] == 1
                for lam, c in exp.items():
                    assert c > 0
                    assert dominance_leq(lam, lead)


def test_expansion_coefficients_positive_and_graded():
    for beta in enumerate_compositions(9, 3):
        exp = expand_elementary_product(beta, 3)
        for lam in exp:
            assert sum(lam) == 9 and len(lam) == 3


def test_transition_matrix_shape_and_unitriangular():
    for n in range(1, 11):
        for ell in range(1, n + 1):
            tm = transition_matrix(n, ell)
            assert len(tm.partitions) == len(tm.compositions)
            for beta in tm.compositions:
                assert tm.entry(leading_partition(beta), beta) == 1


def test_transition_matrix_inverts_expansion():
    for n in range(1, 11):
        for ell in range(1, n + 1):
            tm = transition_matrix(n, ell)
            for beta in tm.compositions:
                exp = expand_elementary_product(beta, ell)
                for beta2 in tm.compositions:
                    got = sum(
                        exp.get(lam, 0) * tm.entry(lam, beta2)
                        for lam in tm.partitions
                    )
                    assert got == (1 if beta == beta2 else 0)


def test_g_column_example():
    tm = transition_matrix(4, 2)
    assert tm.g_column((0, 2)) == {(2, 2): 1, (3, 1): -2}
    assert tm.g_column((2, 1)) == {(3, 1): 1}


def test_solve_g_coefficients_round_trip():
    tm = transition_matrix(6, 3)
    vector = {}
    want = {}
    for i, beta in enumerate(tm.compositions):
        c = Fraction(i + 1, 3)
        want[beta] = c
        for lam, m in tm.g_column(beta).items():
            vector[lam] = vector.get(lam, Fraction(0)) + c * m
    vector = {k: v for k, v in vector.items() if v != 0}
    assert tm.solve_g_coefficients(vector) == want


def test_solve_rejects_vectors_outside_span():
    tm = transition_matrix(4, 2)
    with pytest.raises(ValueError):
        # x_4 has length 1 and is not a combination of the length-2 columns
        tm.solve_g_coefficients({(2, 2): Fraction(1), (4,): Fraction(1)})


@pytest.mark.parametrize(
    "beta,value",
    [
        ((0, 2), -2),
        ((1, 2), -3),
        ((1,), 1),
        ((0, 0, 1), 1),
        ((2,), 1),
    ],
)
def test_waring_examples(beta, value):
    assert waring_coefficient(beta) == value


def test_waring_matches_matrix_entry():
    for n in range(1, 15):
        for ell in range(1, n + 1):
            omega = (n - ell + 1,) + (1,) * (ell - 1)
            tm = transition_matrix(n, ell)
            for beta in tm.compositions:
                assert waring_coefficient(beta) == tm.entry(omega, beta)
                assert waring_coefficient(beta) != 0


def test_waring_unit_iff_square_weight():
    for n in range(1, 13):
        for ell in range(1, n + 1):
            for beta in enumerate_compositions(n, ell):
                if weight(beta) == len(beta):
                    assert waring_coefficient(beta) == 1


def test_leading_partition_is_conjugate():
    for n in range(1, 12):
        for ell in range(1, n + 1):
            for beta in enumerate_compositions(n, ell):
                assert leading_partition(beta) == conjugate(to_partition(beta))
