from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithcap.errors import DomainError, ScaleCap
from arithcap.oracle import GridSpec, game_value_2x2, grid_max_quadratic, simplex_lattice


def brute_lattice(n, N):
    return [p for p in product(range(N + 1), repeat=n) if sum(p) == N]


@pytest.mark.parametrize("n, N", [(1, 5), (2, 4), (3, 6), (4, 3)])
def test_simplex_lattice_is_complete_and_ordered(n, N):
    assert [tuple(p) for p in simplex_lattice(n, N).tolist()] == brute_lattice(n, N)


def test_grid_max_examples():
    g = grid_max_quadratic([[-2.0, -1.0], [-1.0, -2.0]])
    assert abs(g.value + 1.5) <= 1e-3
    assert g.argmax == pytest.approx([0.5, 0.5], abs=1e-3)
    g = grid_max_quadratic([[-4.0]], GridSpec(1, 0.25))
    assert g.value == -4.0 and g.argmax.tolist() == [1.0]
    g = grid_max_quadratic([[0.0, 0.0], [0.0, 0.0]])
    assert g.value == 0.0 and g.argmax.tolist() == [0.0, 1.0]


@given(st.integers(2, 3), st.integers(0, 2**32 - 1))
def test_grid_max_matches_exhaustive_enumeration(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    a = (a + a.T) / 2
    N = 20
    s = simplex_lattice(n, N) / N
    vals = ((s @ a) * s).sum(axis=1)
    g = grid_max_quadratic(a, GridSpec(n, 1 / N))
    assert g.value == pytest.approx(vals.max(), abs=1e-12)
    assert g.argmax.tolist() == s[int(np.argmax(vals))].tolist()


def test_grid_spec_limits():
    with pytest.raises(ScaleCap):
        GridSpec(5)
    with pytest.raises(DomainError):
        GridSpec(2, 0.0)
    with pytest.raises(ScaleCap):
        grid_max_quadratic(np.eye(5))
    with pytest.raises(DomainError):
        grid_max_quadratic(np.eye(2), GridSpec(3))


@pytest.mark.parametrize("a, v", [([[0, 1], [1, 0]], 0.5), ([[1, 1], [1, 1]], 1.0), ([[2, -1], [-1, 1]], 0.2), ([[3, 1], [4, 2]], 2.0)])
def test_game_value_2x2(a, v):
    assert game_value_2x2(a) == pytest.approx(v)
