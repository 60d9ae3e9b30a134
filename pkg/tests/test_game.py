import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from arithcap.errors import DimensionMismatch, DomainError
from arithcap.game import GameMatrix, game_value, shifted_value
from arithcap.oracle import game_value_2x2, grid_game_value

entries = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def square(n):
    return arrays(np.float64, (n, n), elements=entries)


@pytest.mark.parametrize("c", [-3.5, 0.0, 2.0])
def test_one_by_one_game(c):
    sol = game_value([[c]])
    assert sol.value == pytest.approx(c, abs=1e-12)
    assert sol.row_strategy.tolist() == [1.0]
    assert sol.col_strategy.tolist() == [1.0]


@pytest.mark.parametrize(
    "a, value, row",
    [
        ([[0, 1], [1, 0]], 0.5, [0.5, 0.5]),
        ([[2, -1], [-1, 1]], 0.2, [0.4, 0.6]),
    ],
)
def test_two_by_two_examples(a, value, row):
    sol = game_value(a)
    assert sol.value == pytest.approx(value, abs=1e-12)
    assert sol.row_strategy == pytest.approx(row, abs=1e-12)
    assert sol.col_strategy == pytest.approx(row, abs=1e-12)
    assert game_value_2x2(a) == pytest.approx(value, abs=1e-12)


def test_shifted_value_examples():
    assert shifted_value([[0]], 3) == pytest.approx(3)
    assert shifted_value([[0, 1], [1, 0]], 2.0) == pytest.approx(2.5)
    G = [[1.0, -2.0], [0.5, 3.0]]
    assert shifted_value(G, 0) == pytest.approx(game_value(G).value, abs=1e-14)


@given(square(2))
def test_matches_two_by_two_closed_form(a):
    assert game_value(a).value == pytest.approx(game_value_2x2(a), abs=1e-8)


@given(st.integers(1, 5).flatmap(square), st.floats(-50, 50))
def test_shift_invariance(a, c):
    assert shifted_value(a, c) - game_value(a).value == pytest.approx(c, abs=1e-8)


@given(st.integers(1, 5).flatmap(square), st.floats(0.1, 10))
def test_positive_scaling(a, k):
    assert game_value(k * a).value == pytest.approx(k * game_value(a).value, abs=1e-8 * max(1.0, k))


@given(st.integers(1, 5).flatmap(square))
def test_strategies_certify_value(a):
    sol = game_value(a)
    assert sol.row_strategy.sum() == pytest.approx(1.0)
    assert sol.col_strategy.sum() == pytest.approx(1.0)
    assert np.all(sol.row_strategy >= -1e-12) and np.all(sol.col_strategy >= -1e-12)
    # the row player guarantees at least the value, the column player at most
    assert (sol.row_strategy @ a).min() >= sol.value - 1e-8
    assert (a @ sol.col_strategy).max() <= sol.value + 1e-8


@given(st.integers(1, 3).flatmap(square))
def test_grid_bracket_contains_value(a):
    lo, hi = grid_game_value(a, step=0.02)
    v = game_value(a).value
    assert lo - 1e-9 <= v <= hi + 1e-9


@given(st.integers(1, 4).flatmap(square), st.integers(1, 4).flatmap(square))
def test_monotone_in_entries(a, b):
    n = min(len(a), len(b))
    a, b = a[:n, :n], b[:n, :n]
    hi = np.maximum(a, b)
    assert game_value(hi).value >= game_value(a).value - 1e-9


def test_game_matrix_validation():
    with pytest.raises(DimensionMismatch):
        GameMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(DomainError):
        GameMatrix([[float("nan")]])
