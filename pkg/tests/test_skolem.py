from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithcap.errors import DimensionMismatch, DomainError
from arithcap.oracle import bareiss_det, char_poly_values
from arithcap.skolem import (
    ExponentSet,
    MultiplicationMatrix,
    cayley_hamilton_check,
    char_poly,
    leading_unit_check,
    linear_form,
    monomial_exponents,
    nonzero_coefficients,
    substitute_monomials,
)


def polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def horner(coeffs, x):
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


@st.composite
def exponent_sets(draw):
    n = draw(st.integers(1, 4))
    pts = draw(st.lists(st.tuples(*[st.integers(0, 6)] * n), min_size=1, max_size=25, unique=True))
    return ExponentSet.of(pts)


def square_matrices(max_n=6, lo=-9, hi=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@pytest.mark.parametrize(
    "points, m, images",
    [
        ([(0, 0), (1, 0), (0, 1), (1, 1)], (1, 2), [0, 1, 2, 3]),
        ([(2, 5, 1)], (1, 1, 1), [8]),
        ([(0, 3), (3, 0)], (1, 2), [6, 3]),
    ],
)
def test_monomial_exponent_examples(points, m, images):
    sigma = ExponentSet.of(points)
    assert monomial_exponents(sigma) == m
    assert [linear_form(m, p) for p in sigma.points] == images


@given(exponent_sets())
def test_linear_form_is_injective(sigma):
    m = monomial_exponents(sigma)
    assert m[0] == 1 and all(x >= 1 for x in m)
    images = [linear_form(m, p) for p in sigma.points]
    assert all(a != b for a, b in combinations(images, 2))


@given(exponent_sets())
def test_each_step_takes_the_smallest_value(sigma):
    m = monomial_exponents(sigma)
    for k in range(1, sigma.n):
        if m[k] > 1:
            smaller = list(m[:k]) + [m[k] - 1]
            images = {}
            collided = False
            for p in sigma.points:
                prev = images.setdefault(linear_form(smaller, p[: k + 1]), p[: k + 1])
                collided |= prev != p[: k + 1]
            assert collided


@given(exponent_sets(), st.data())
def test_substitution_preserves_coefficients(sigma, data):
    coeffs = data.draw(
        st.lists(st.fractions(max_denominator=20), min_size=len(sigma.points), max_size=len(sigma.points))
    )
    poly = dict(zip(sigma.points, coeffs))
    uni = substitute_monomials(poly, monomial_exponents(sigma))
    assert nonzero_coefficients(uni) == nonzero_coefficients(poly)


def test_exponent_set_validation():
    with pytest.raises(DomainError):
        ExponentSet.of([])
    with pytest.raises(DomainError):
        ExponentSet.of([(1, 2), (1, 2)])
    with pytest.raises(DimensionMismatch):
        ExponentSet.of([(1, 2), (1,)])
    with pytest.raises(DomainError):
        ExponentSet.of([(-1,)])


@pytest.mark.parametrize(
    "z, expected",
    [
        ([[0, 1], [0, 0]], [1, 0, 0]),
        ([[2, 0], [0, 3]], [1, -5, 6]),
        ([[0, -1], [1, 0]], [1, 0, 1]),
        ([["1/2"]], [1, Fraction(-1, 2)]),
    ],
)
def test_char_poly_examples(z, expected):
    F = char_poly(MultiplicationMatrix(z))
    assert F == [Fraction(c) for c in expected]
    assert cayley_hamilton_check(MultiplicationMatrix(z))


@given(square_matrices())
def test_cayley_hamilton_exact(rows):
    assert cayley_hamilton_check(MultiplicationMatrix(rows))


@given(square_matrices(max_n=5))
def test_char_poly_agrees_with_determinants(rows):
    F = char_poly(MultiplicationMatrix(rows))
    xs = list(range(-2, len(rows) + 2))
    assert char_poly_values(rows, xs) == [horner(F, x) for x in xs]


@given(square_matrices(max_n=3), square_matrices(max_n=3))
def test_block_diagonal_char_poly_factors(a, b):
    n, k = len(a), len(b)
    block = [row + [0] * k for row in a] + [[0] * n + row for row in b]
    assert char_poly(block) == polymul(char_poly(a), char_poly(b))


@given(square_matrices(max_n=4))
def test_trace_and_determinant_coefficients(rows):
    F = char_poly(rows)
    n = len(rows)
    assert F[1] == -sum(rows[i][i] for i in range(n))
    assert F[-1] == (-1) ** n * bareiss_det(rows)


def test_perturbed_polynomial_is_rejected():
    z = MultiplicationMatrix([[1]])
    F = char_poly(z)
    assert cayley_hamilton_check(z, F)
    assert not cayley_hamilton_check(z, F[:-1] + [F[-1] + 1])


def test_multiplication_matrix_must_be_square():
    with pytest.raises(DimensionMismatch):
        MultiplicationMatrix([[1, 2]])


@pytest.mark.parametrize(
    "poly, expected",
    [([1, -5, 6], True), ([2, 1], False), ([-1, 0, 0, 0], True), ([0, 0, -1, 4], True)],
)
def test_leading_unit(poly, expected):
    assert leading_unit_check(poly) is expected


def test_leading_unit_at_infinity_keeps_leading_zero():
    assert leading_unit_check([0, 1, 3], localized_at_infinity=True) is False
    assert leading_unit_check([1, 1, 3], localized_at_infinity=True) is True
    with pytest.raises(DomainError):
        leading_unit_check([0, 0])
