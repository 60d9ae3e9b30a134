"""Brute-force cross-checks for small instances.

Nothing here calls the LP solver, the linear solver, or the Faddeev-LeVerrier
recurrence: each oracle reaches its answer by an unrelated route (lattice
enumeration, closed forms, mpmath at 50 digits, Bareiss determinants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath
import numpy as np

from .errors import DomainError, ScaleCap

MAX_DIMENSION = 4


@dataclass(frozen=True)
class GridSpec:
    dimension: int
    step: float = 1e-3

    def __post_init__(self):
        if not 0 < self.step <= 1:
            raise DomainError(f"grid step must lie in (0, 1], got {self.step!r}")
        if self.dimension < 1:
            raise DomainError("grid dimension must be positive")
        if self.dimension > MAX_DIMENSION:
            raise ScaleCap(f"grid oracle is capped at dimension {MAX_DIMENSION}, got {self.dimension}")

    @property
    def divisions(self) -> int:
        return max(1, round(1.0 / self.step))


def _compositions(k: int, N: int) -> np.ndarray:
    """All k-tuples of nonnegative integers with sum <= N, lexicographic."""
    rows = np.zeros((1, 0), dtype=np.int64)
    sums = np.zeros(1, dtype=np.int64)
    for _ in range(k):
        counts = N - sums + 1
        idx = np.repeat(np.arange(len(rows)), counts)
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        col = np.arange(len(idx)) - starts
        rows = np.hstack([rows[idx], col[:, None]])
        sums = sums[idx] + col
    return rows


def simplex_lattice(n: int, N: int) -> np.ndarray:
    """Every point of {x in Z_{>=0}^n : sum x = N}, lexicographic order."""
    head = _compositions(n - 1, N)
    return np.hstack([head, (N - head.sum(axis=1))[:, None]])


class GridMax(NamedTuple):
    value: float
    argmax: np.ndarray


def grid_max_quadratic(G, spec: GridSpec | None = None) -> GridMax:
    """Maximum of s^T G s over the simplex lattice with spacing ``spec.step``.

    The first n-2 coordinates are enumerated; along each remaining segment
    (c, M - c) the form is a quadratic in the integer c, so only c in
    {0, M, floor(vertex), ceil(vertex)} can be the maximizer.  Ties go to the
    lexicographically smallest lattice point.
    """
    a = np.asarray(getattr(G, "entries", G), dtype=float)
    n = a.shape[0]
    spec = spec or GridSpec(n)
    if n > MAX_DIMENSION:
        raise ScaleCap(f"grid oracle is capped at dimension {MAX_DIMENSION}, got {n}")
    if spec.dimension != n:
        raise DomainError(f"grid dimension {spec.dimension} does not match matrix size {n}")
    N = spec.divisions
    if n == 1:
        return GridMax(float(a[0, 0]), np.ones(1))

    prefix = _compositions(n - 2, N)
    M = N - prefix.sum(axis=1)
    base = np.hstack([prefix, np.zeros((len(prefix), 1)), M[:, None]]).astype(float)
    d = np.zeros(n)
    d[n - 2], d[n - 1] = 1.0, -1.0
    # f(c) = base.G.base + 2 c d.G.base + c^2 d.G.d
    quad = d @ a @ d
    lin = base @ (a @ d)
    with np.errstate(divide="ignore", invalid="ignore"):
        vertex = np.where(quad < 0, -lin / quad, 0.0)
    vertex = np.clip(np.nan_to_num(vertex), 0, M)
    cands = np.stack([np.zeros_like(M), np.floor(vertex), np.ceil(vertex), M], axis=1).astype(np.int64)
    cands = np.sort(cands, axis=1)
    pts = base[:, None, :] + cands[:, :, None] * d[None, None, :]
    s = pts / N
    vals = ((s @ a) * s).sum(axis=-1)
    best_c = np.argmax(vals, axis=1)  # first max = smallest c
    line_best = vals[np.arange(len(vals)), best_c]
    p = int(np.argmax(line_best))
    return GridMax(float(line_best[p]), s[p, best_c[p]])


class GridGame(NamedTuple):
    lower: float
    upper: float


def grid_game_value(G, step: float = 1e-3) -> GridGame:
    """Bracket the game value by lattice search over both players' simplices.

    ``lower = max_p min_j (p G)_j`` and ``upper = min_q max_i (G q)_i``; the
    inner optimizations are over pure strategies, which is exact.
    """
    a = np.asarray(getattr(G, "entries", G), dtype=float)
    n = a.shape[0]
    if n > 3:
        raise ScaleCap(f"game grid oracle is capped at n = 3, got {n}")
    N = max(1, round(1.0 / step))
    P = simplex_lattice(n, N) / N
    lower = float((P @ a).min(axis=1).max())
    upper = float((P @ a.T).max(axis=1).min())
    return GridGame(lower, upper)


def game_value_2x2(G) -> float:
    """Closed-form value of a 2x2 zero-sum game (row player maximizes)."""
    a = np.asarray(getattr(G, "entries", G), dtype=float)
    if a.shape != (2, 2):
        raise DomainError(f"closed form needs a 2x2 game, got shape {a.shape}")
    maximin = max(a[0].min(), a[1].min())
    minimax = min(a[:, 0].max(), a[:, 1].max())
    if maximin == minimax:
        return float(maximin)
    (p, q), (r, s) = a
    return float((p * s - q * r) / (p + s - q - r))


# extended precision recomputation

PRECISION_DIGITS = 50


def mp_radius_norm(r) -> mpmath.mpf:
    with mpmath.workdps(PRECISION_DIGITS):
        out = mpmath.mpf(1)
        for place, value in r.support:
            if place.is_archimedean:
                out *= mpmath.mpf(value)
            else:
                out *= mpmath.mpf(value.numerator) / value.denominator
        return out


def mp_polydisk_capacity(d: int, r) -> mpmath.mpf:
    with mpmath.workdps(PRECISION_DIGITS):
        return mp_radius_norm(r) ** d


def mp_pullback_capacity(d: int, degree: int, multiplicity: int, r) -> mpmath.mpf:
    with mpmath.workdps(PRECISION_DIGITS):
        return mp_radius_norm(r) ** (mpmath.mpf(d * degree) / mpmath.mpf(multiplicity) ** (d + 1))


def mp_power(x, p: Fraction) -> mpmath.mpf:
    with mpmath.workdps(PRECISION_DIGITS):
        return mpmath.mpf(x) ** (mpmath.mpf(p.numerator) / p.denominator)


def bareiss_det(rows) -> Fraction:
    """Exact determinant by fraction-free Bareiss elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else Fraction(1)


def char_poly_values(z, points) -> list[Fraction]:
    """det(x I - z) at each x, computed independently of any recurrence."""
    rows = [[Fraction(v) for v in row] for row in z]
    n = len(rows)
    out = []
    for x in points:
        shifted = [[(Fraction(x) if i == j else 0) - rows[i][j] for j in range(n)] for i in range(n)]
        out.append(bareiss_det(shifted))
    return out
