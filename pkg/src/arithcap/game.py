"""Two-player zero-sum matrix games solved by a primal simplex method.

The row player maximizes ``p @ G @ q``, the column player minimizes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, DomainError, NumericFailure

PIVOT_TOL = 1e-10


@dataclass(frozen=True)
class GameMatrix:
    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DimensionMismatch(f"game matrix must be square and nonempty, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise DomainError("game matrix has non-finite entries")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


class GameSolution(NamedTuple):
    value: float
    row_strategy: np.ndarray
    col_strategy: np.ndarray


def _as_matrix(G) -> np.ndarray:
    if isinstance(G, GameMatrix):
        return G.entries
    return GameMatrix(G).entries


def _simplex_max(A: np.ndarray, max_pivots: int, tol: float):
    """Maximize sum(y) subject to A y <= 1, y >= 0, for A > 0 entrywise.

    The slack basis is feasible, so no phase one is needed.  Bland's rule
    picks the lowest-index entering column and breaks ratio ties by the
    lowest-index leaving variable.  Returns (y, x) where x are the duals.
    """
    m, n = A.shape
    T = np.hstack([A, np.eye(m)])
    rhs = np.ones(m)
    cost = np.concatenate([-np.ones(n), np.zeros(m)])
    obj = 0.0
    basis = list(range(n, n + m))

    for _ in range(max_pivots + 1):
        entering = next((j for j in range(n + m) if cost[j] < -tol), None)
        if entering is None:
            break
        col = T[:, entering]
        best, leave = None, None
        for i in range(m):
            if col[i] > tol:
                ratio = rhs[i] / col[i]
                if best is None or ratio < best - tol or (abs(ratio - best) <= tol and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise NumericFailure("game LP is unbounded; payoff shift failed")
        piv = T[leave, entering]
        T[leave] /= piv
        rhs[leave] /= piv
        for i in range(m):
            if i != leave and T[i, entering] != 0.0:
                f = T[i, entering]
                T[i] -= f * T[leave]
                rhs[i] -= f * rhs[leave]
        f = cost[entering]
        cost -= f * T[leave]
        obj -= f * rhs[leave]
        basis[leave] = entering
    else:
        raise NumericFailure(f"simplex did not terminate within {max_pivots} pivots")

    y = np.zeros(n)
    for i, b in enumerate(basis):
        if b < n:
            y[b] = rhs[i]
    x = cost[n:].copy()
    return y, x


def _normalize(w: np.ndarray) -> np.ndarray:
    w = np.where(w < 0.0, 0.0, w)
    return w / w.sum()


def game_value(G, *, tol: float = PIVOT_TOL) -> GameSolution:
    """Minimax value and a pair of optimal mixed strategies.

    Optimal strategies need not be unique; the one returned is the basic
    optimum reached by the deterministic pivot order.
    """
    a = _as_matrix(G)
    n = a.shape[0]
    shift = 1.0 + max(0.0, -float(a.min()))
    y, x = _simplex_max(a + shift, max_pivots=10 * n * (n + 2), tol=tol)
    total = y.sum()
    if total <= 0.0:
        raise NumericFailure("degenerate game LP solution")
    value = float(1.0 / total - shift)
    return GameSolution(value, _normalize(x), _normalize(y))


def shifted_value(G, c: float, *, tol: float = PIVOT_TOL) -> float:
    """Value of ``G + c J`` with J the all-ones matrix."""
    a = _as_matrix(G)
    return game_value(a + c, tol=tol).value
