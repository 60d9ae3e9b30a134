import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithcap.config import Tolerances
from arithcap.errors import (
    AsymmetricMatrix,
    BoundaryOptimum,
    DimensionMismatch,
    DomainError,
    NotNegativeDefinite,
    SingularMatrix,
    SymmetryViolation,
)
from arithcap.game import game_value
from arithcap.green import (
    GreensMatrix,
    Normalization,
    WeightVector,
    cantor_rumely_capacity,
    equilibrium_weights,
    is_negative_definite,
    s_plus_support,
    sectional_capacity_from_weights,
    validate,
)
from arithcap.oracle import grid_max_quadratic
from arithcap.selftest import random_interior_negative_definite

LN2 = math.log(2)
PAIR = [[-2.0, -1.0], [-1.0, -2.0]]
seeds = st.integers(0, 2**32 - 1)


def test_validate_examples():
    validate(GreensMatrix([[LN2]]))
    validate(GreensMatrix(PAIR, orbits=[[0, 1]], generators=[(1, 0)]))
    with pytest.raises(AsymmetricMatrix):
        validate(GreensMatrix([[-2, -1], [0, -2]]))


def test_symmetry_violation_names_pair():
    G = GreensMatrix([[-2, -1, 0], [-1, -3, 0], [0, 0, -1]], orbits=[[0, 1], [2]], generators=[(1, 0, 2)])
    with pytest.raises(SymmetryViolation) as info:
        validate(G)
    assert info.value.generator == (1, 0, 2)


def test_generator_must_preserve_orbits():
    G = GreensMatrix(PAIR, generators=[(1, 0)])
    with pytest.raises(DomainError):
        validate(G)


def test_orbits_must_partition():
    with pytest.raises(DomainError):
        GreensMatrix(PAIR, orbits=[[0]])
    with pytest.raises(DimensionMismatch):
        GreensMatrix([[1, 2, 3]])


@pytest.mark.parametrize(
    "entries, s, expected",
    [
        ([[LN2]], [1], 0.5),
        ([[0, 0], [0, 0]], [1, 1], 1.0),
        (PAIR, [1, 1], math.exp(6)),
    ],
)
def test_sectional_capacity_from_weights(entries, s, expected):
    assert sectional_capacity_from_weights(GreensMatrix(entries), s) == pytest.approx(expected, rel=1e-12)


def test_weights_must_be_f_symmetric():
    G = GreensMatrix(PAIR, orbits=[[0, 1]], generators=[(1, 0)])
    with pytest.raises(SymmetryViolation):
        sectional_capacity_from_weights(G, [1, 2])
    with pytest.raises(DimensionMismatch):
        sectional_capacity_from_weights(G, [1, 1, 1])


@pytest.mark.parametrize(
    "entries, expected",
    [([[LN2]], 0.5), ([[0]], 1.0), (PAIR, math.exp(1.5))],
)
def test_cantor_rumely_capacity(entries, expected):
    assert cantor_rumely_capacity(GreensMatrix(entries)) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "entries, expected",
    [([[-1, 0], [0, -1]], True), ([[1, 0], [0, -1]], False), (PAIR, True), ([[0]], False)],
)
def test_negative_definite(entries, expected):
    assert is_negative_definite(GreensMatrix(entries)) is expected


@pytest.mark.parametrize(
    "entries, s_hat, lam",
    [
        (PAIR, [0.5, 0.5], -1.5),
        ([[-3.25]], [1.0], -3.25),
        ([[-10, 0], [0, -1]], [1 / 11, 10 / 11], -10 / 11),
    ],
)
def test_equilibrium_examples(entries, s_hat, lam):
    eq = equilibrium_weights(GreensMatrix(entries))
    assert eq.s_hat.values == pytest.approx(s_hat, abs=1e-14)
    assert eq.lam == pytest.approx(lam, abs=1e-14)
    assert eq.s_hat.normalization is Normalization.SIMPLEX


@pytest.mark.parametrize("entries, expected", [(PAIR, math.exp(1.5)), ([[-LN2]], 2.0)])
def test_s_plus_support(entries, expected):
    assert s_plus_support(GreensMatrix(entries)) == pytest.approx(expected, rel=1e-12)


def test_equilibrium_errors():
    with pytest.raises(NotNegativeDefinite):
        equilibrium_weights(GreensMatrix([[1, 0], [0, 1]]))
    with pytest.raises(BoundaryOptimum) as info:
        equilibrium_weights(GreensMatrix([[-1, -2], [-2, -10]]))
    assert info.value.s_hat == pytest.approx([8 / 7, -1 / 7])
    with pytest.raises(SingularMatrix):
        equilibrium_weights(GreensMatrix([[-1, 0], [0, -1e-14]]), Tolerances(minor_rel=1e-20))


def test_weight_vector_checks():
    with pytest.raises(DomainError):
        WeightVector([-1, 2])
    with pytest.raises(DomainError):
        WeightVector([0.2, 0.2], Normalization.SIMPLEX)
    assert WeightVector([0.5, 0.5], Normalization.SIMPLEX).is_interior()
    assert not WeightVector([0, 1]).is_interior()


@given(seeds, st.integers(1, 4))
def test_equilibrium_matches_construction(seed, n):
    G, s, lam = random_interior_negative_definite(np.random.default_rng(seed), n)
    eq = equilibrium_weights(G)
    assert eq.s_hat.values == pytest.approx(s, abs=1e-8)
    assert eq.lam == pytest.approx(lam, abs=1e-8)
    spread = np.ptp(G.entries @ eq.s_hat.values)
    assert spread <= 1e-9 * max(1.0, abs(eq.lam))


@given(seeds, st.integers(1, 4))
def test_lambda_equals_game_value(seed, n):
    G, _, _ = random_interior_negative_definite(np.random.default_rng(seed), n)
    lam = equilibrium_weights(G).lam
    assert abs(lam - game_value(G.entries).value) <= 1e-6
    assert s_plus_support(G) == pytest.approx(cantor_rumely_capacity(G), rel=1e-6)


@given(seeds, st.integers(2, 4))
def test_argmax_invariant_under_generators(seed, n):
    G, _, _ = random_interior_negative_definite(np.random.default_rng(seed), n)
    s = equilibrium_weights(G).s_hat.values
    for g in G.generators:
        assert s[list(g)] == pytest.approx(s, abs=1e-12)


@given(seeds, st.integers(1, 3))
def test_grid_oracle_brackets_lambda(seed, n):
    G, _, _ = random_interior_negative_definite(np.random.default_rng(seed), n)
    lam = equilibrium_weights(G).lam
    grid = grid_max_quadratic(G)
    assert grid.value <= lam + 1e-12
    assert lam - grid.value <= 1e-3 * max(1.0, float(np.abs(G.entries).max()))


@given(seeds, st.integers(1, 4), st.floats(0, 1))
def test_capacity_monotone_in_matrix(seed, n, bump):
    rng = np.random.default_rng(seed)
    G, _, _ = random_interior_negative_definite(rng, n)
    E = rng.uniform(0, bump, size=(n, n))
    bigger = GreensMatrix(G.entries + (E + E.T) / 2)
    assert cantor_rumely_capacity(bigger) <= cantor_rumely_capacity(G) * (1 + 1e-12)


@given(seeds, st.integers(1, 4), st.floats(1e-9, 1e-2))
def test_small_perturbations_move_value_by_at_most_eps(seed, n, eps):
    rng = np.random.default_rng(seed)
    G, _, _ = random_interior_negative_definite(rng, n)
    E = rng.uniform(-eps, eps, size=(n, n))
    moved = GreensMatrix(G.entries + (E + E.T) / 2)
    assert abs(game_value(moved.entries).value - game_value(G.entries).value) <= eps + 1e-9
