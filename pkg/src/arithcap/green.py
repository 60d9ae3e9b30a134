"""Green's-matrix capacities.

A Green's matrix is a real symmetric matrix indexed by a finite Galois-stable
point set, together with the partition of that set into Galois orbits and a
list of index permutations generating the Galois action.  From it we compute

* the sectional capacity of a divisor with multiplicities ``s``:
  ``exp(-s^T G s)``;
* the Cantor-Rumely capacity ``exp(-Val(G))`` where Val is the value of G as
  a zero-sum matrix game;
* for negative definite G, the maximizer of ``s^T G s`` over the probability
  simplex and the associated capacity ``exp(-max)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import (
    AsymmetricMatrix,
    BoundaryOptimum,
    DimensionMismatch,
    DomainError,
    NotNegativeDefinite,
    NumericFailure,
    SingularMatrix,
    SymmetryViolation,
)
from .game import game_value


def _check_partition(orbits, n: int) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(int(i) for i in block) for block in orbits)
    flat = [i for block in blocks for i in block]
    if any(len(b) == 0 for b in blocks):
        raise DomainError("orbit partition has an empty block")
    if sorted(flat) != list(range(n)):
        raise DomainError(f"orbits must partition the indices 0..{n - 1}, got {blocks}")
    return blocks


def _check_permutation(g, n: int) -> tuple[int, ...]:
    g = tuple(int(i) for i in g)
    if sorted(g) != list(range(n)):
        raise DomainError(f"generator {g} is not a permutation of 0..{n - 1}")
    return g


@dataclass(frozen=True)
class GreensMatrix:
    """Symmetric matrix plus Galois structure on its index set (0-based)."""

    entries: np.ndarray
    orbits: tuple = None
    generators: tuple = ()

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DimensionMismatch(f"Green's matrix must be square and nonempty, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise DomainError("Green's matrix has non-finite entries")
        a.setflags(write=False)
        n = a.shape[0]
        orbits = tuple((i,) for i in range(n)) if self.orbits is None else self.orbits
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "orbits", _check_partition(orbits, n))
        object.__setattr__(self, "generators", tuple(_check_permutation(g, n) for g in self.generators))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def orbit_of(self) -> list[int]:
        label = [0] * self.n
        for k, block in enumerate(self.orbits):
            for i in block:
                label[i] = k
        return label


class Normalization(enum.Enum):
    SIMPLEX = "simplex"
    DIVISOR = "divisor"


@dataclass(frozen=True)
class WeightVector:
    values: np.ndarray
    normalization: Normalization = Normalization.DIVISOR

    def __post_init__(self):
        v = np.array(self.values, dtype=float).reshape(-1)
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise DomainError("weights must be finite and nonnegative")
        if self.normalization is Normalization.SIMPLEX and abs(v.sum() - 1.0) > 1e-9:
            raise DomainError(f"simplex weights must sum to 1, got {v.sum()!r}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.values)

    def is_f_symmetric(self, orbits, tol: float = 0.0) -> bool:
        for block in orbits:
            vals = self.values[list(block)]
            if vals.max() - vals.min() > tol * max(1.0, abs(vals).max()):
                return False
        return True

    def is_interior(self) -> bool:
        return bool(np.all(self.values > 0))


def validate(G: GreensMatrix, symmetry_generators: Sequence | None = None, tol: Tolerances = DEFAULT) -> None:
    """Raise unless G is symmetric and invariant under each generator.

    Generators default to ``G.generators``; each must map every orbit onto
    itself.
    """
    a = G.entries
    n = G.n
    eps = tol.symmetry
    diff = np.abs(a - a.T)
    if np.any(diff > eps * np.maximum(1.0, np.abs(a))):
        i, j = np.argwhere(diff > eps * np.maximum(1.0, np.abs(a)))[0]
        raise AsymmetricMatrix(f"entries ({i},{j}) and ({j},{i}) differ: {a[i, j]!r} != {a[j, i]!r}")
    gens = G.generators if symmetry_generators is None else tuple(_check_permutation(g, n) for g in symmetry_generators)
    label = G.orbit_of()
    for g in gens:
        if any(label[g[i]] != label[i] for i in range(n)):
            raise DomainError(f"generator {g} does not preserve the orbit partition")
        moved = a[np.ix_(g, g)]
        bad = np.argwhere(np.abs(moved - a) > eps * np.maximum(1.0, np.abs(a)))
        if len(bad):
            i, j = (int(x) for x in bad[0])
            raise SymmetryViolation(
                f"entry ({i},{j}) = {a[i, j]!r} but image ({g[i]},{g[j]}) under {g} is {a[g[i], g[j]]!r}",
                i=i, j=j, generator=g,
            )


def _weights(G: GreensMatrix, s) -> np.ndarray:
    w = s if isinstance(s, WeightVector) else WeightVector(s)
    if len(w) != G.n:
        raise DimensionMismatch(f"weight vector has length {len(w)}, matrix is {G.n}x{G.n}")
    if not w.is_f_symmetric(G.orbits):
        raise SymmetryViolation(f"weights {w.values.tolist()} are not constant on orbits {G.orbits}")
    return w.values


def quadratic_form(G: GreensMatrix, s) -> float:
    v = _weights(G, s)
    return float(v @ G.entries @ v)


def sectional_capacity_from_weights(G: GreensMatrix, s, tol: Tolerances = DEFAULT) -> float:
    """exp(-s^T G s) for the divisor sum(s_i x_i)."""
    validate(G, tol=tol)
    q = quadratic_form(G, s)
    try:
        return math.exp(-q)
    except OverflowError:
        raise NumericFailure(f"capacity exp({-q}) overflows") from None


def cantor_rumely_capacity(G: GreensMatrix, tol: Tolerances = DEFAULT) -> float:
    validate(G, tol=tol)
    val = game_value(G.entries, tol=tol.pivot).value
    try:
        return math.exp(-val)
    except OverflowError:
        raise NumericFailure(f"capacity exp({-val}) overflows") from None


def leading_minors(a: np.ndarray) -> list[float]:
    return [float(np.linalg.det(a[:k, :k])) for k in range(1, a.shape[0] + 1)]


def is_negative_definite(G: GreensMatrix, tol: Tolerances = DEFAULT) -> bool:
    """Sylvester's criterion applied to -G.

    Each leading minor is an LU determinant; it counts as positive only above
    ``minor_rel * scale**k`` with ``scale`` the largest entry magnitude.
    """
    a = -np.asarray(G.entries, dtype=float)
    scale = float(np.abs(a).max())
    if scale == 0.0:
        return False
    return all(m > tol.minor_rel * scale**k for k, m in enumerate(leading_minors(a), start=1))


class Equilibrium(NamedTuple):
    s_hat: WeightVector
    lam: float


def equilibrium_weights(G: GreensMatrix, tol: Tolerances = DEFAULT) -> Equilibrium:
    """Maximizer of s^T G s over the probability simplex for negative definite G.

    Solves ``G w = 1`` and normalizes, so ``G s_hat`` is the constant vector
    ``lam * 1`` with ``lam = 1 / (1^T G^{-1} 1)``.  Raises BoundaryOptimum when
    the stationary point leaves the open simplex.
    """
    validate(G, tol=tol)
    if not is_negative_definite(G, tol):
        raise NotNegativeDefinite("matrix fails Sylvester's criterion for negative definiteness")
    a = G.entries
    cond = np.linalg.cond(a)
    if not np.isfinite(cond) or cond > tol.cond_max:
        raise SingularMatrix(f"condition number {cond:.3e} exceeds {tol.cond_max:.0e}")
    w = np.linalg.solve(a, np.ones(G.n))
    denom = float(w.sum())
    if denom == 0.0:
        raise SingularMatrix("1^T G^-1 1 vanishes")
    s_hat = w / denom
    lam = 1.0 / denom
    resid = np.abs(a @ s_hat - lam)
    if resid.max() > tol.equal_components * max(1.0, abs(lam)):
        raise NumericFailure(f"components of G s_hat differ by {resid.max():.3e}")
    if np.any(s_hat <= 0):
        raise BoundaryOptimum(
            f"stationary point {s_hat.tolist()} is not in the open simplex; the maximum lies on the boundary",
            s_hat=s_hat,
        )
    out = WeightVector(s_hat, Normalization.SIMPLEX)
    if not out.is_f_symmetric(G.orbits, tol.equal_components):
        raise SymmetryViolation(f"equilibrium {s_hat.tolist()} is not constant on orbits {G.orbits}")
    return Equilibrium(out, lam)


def s_plus_support(G: GreensMatrix, tol: Tolerances = DEFAULT) -> float:
    """exp(-lam) for the interior equilibrium of a negative definite G."""
    return math.exp(-equilibrium_weights(G, tol).lam)
