"""Exact combinatorial kernels: injective monomial substitutions and characteristic polynomials.

Polynomials are coefficient lists in descending degree, e.g. ``t**2 - 5t + 6``
is ``[1, -5, 6]``.  Multivariate polynomials are dicts mapping exponent tuples
to coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .adelic import to_fraction
from .errors import DimensionMismatch, DomainError


@dataclass(frozen=True)
class ExponentSet:
    n: int
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if not pts:
            raise DomainError("exponent set must be nonempty")
        if any(len(p) != self.n for p in pts):
            raise DimensionMismatch(f"every exponent tuple must have length {self.n}")
        if any(x < 0 for p in pts for x in p):
            raise DomainError("exponents must be nonnegative")
        if len(set(pts)) != len(pts):
            raise DomainError("exponent tuples must be distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points) -> "ExponentSet":
        points = [tuple(p) for p in points]
        if not points:
            raise DomainError("exponent set must be nonempty")
        return cls(len(points[0]), tuple(points))


def linear_form(m: Sequence[int], x: Sequence[int]) -> int:
    return sum(mi * xi for mi, xi in zip(m, x))


def _separates(m: Sequence[int], points, k: int) -> bool:
    """Whether the partial form on the first k coordinates separates every pair
    of points that differ somewhere in those coordinates."""
    seen: dict[int, tuple] = {}
    for p in points:
        key = linear_form(m[:k], p[:k])
        prev = seen.setdefault(key, p[:k])
        if prev != p[:k]:
            return False
    return True


def monomial_exponents(sigma: ExponentSet) -> tuple[int, ...]:
    """Positive integers (1, m_2, ..., m_n) making x_1 + sum m_l x_l injective on sigma.

    Chosen coordinate by coordinate: m_k is the smallest positive integer for
    which the form on the first k coordinates separates all points whose first
    k coordinates differ.  Each step excludes finitely many values, so the
    search terminates.
    """
    pts = sigma.points
    m = [1]
    for k in range(2, sigma.n + 1):
        mk = 1
        while not _separates(m + [mk], pts, k):
            mk += 1
        m.append(mk)
    images = [linear_form(m, p) for p in pts]
    if len(set(images)) != len(images):
        raise AssertionError(f"form {m} is not injective on {pts}")
    return tuple(m)


def substitute_monomials(poly: Mapping[tuple, object], m: Sequence[int]) -> list[Fraction]:
    """f(t, t**m_2, ..., t**m_n) as a univariate descending coefficient list."""
    acc: dict[int, Fraction] = {}
    for exps, c in poly.items():
        e = linear_form(m, exps)
        acc[e] = acc.get(e, Fraction(0)) + to_fraction(c)
    if not acc:
        return [Fraction(0)]
    top = max(acc)
    return [acc.get(e, Fraction(0)) for e in range(top, -1, -1)]


def nonzero_coefficients(poly) -> Counter:
    vals = poly.values() if isinstance(poly, Mapping) else poly
    return Counter(to_fraction(c) for c in vals if to_fraction(c) != 0)


@dataclass(frozen=True)
class MultiplicationMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DimensionMismatch("multiplication matrix must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @property
    def rank(self) -> int:
        return len(self.entries)


Matrix = list[list[Fraction]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    cols = list(zip(*b))
    return [[sum((a[i][k] * cols[j][k] for k in range(r)), Fraction(0)) for j in range(r)] for i in range(r)]


def _as_rows(z) -> Matrix:
    if isinstance(z, MultiplicationMatrix):
        return [list(row) for row in z.entries]
    return [list(row) for row in MultiplicationMatrix(z).entries]


def char_poly(z) -> list[Fraction]:
    """Monic characteristic polynomial det(t I - z), descending coefficients.

    Faddeev-LeVerrier recurrence over the rationals: with M_0 = 0,
    ``M_k = z M_{k-1} + c_{r-k+1} I`` and ``c_{r-k} = -tr(z M_k) / k``.
    """
    a = _as_rows(z)
    r = len(a)
    coeffs = [Fraction(1)]
    AM = [[Fraction(0)] * r for _ in range(r)]  # z @ M_{k-1}
    for k in range(1, r + 1):
        M = [[AM[i][j] + (coeffs[-1] if i == j else 0) for j in range(r)] for i in range(r)]
        AM = _matmul(a, M)
        coeffs.append(-sum((AM[i][i] for i in range(r)), Fraction(0)) / k)
    return coeffs


def poly_of_matrix(poly: Sequence, z) -> Matrix:
    """Evaluate a descending coefficient list at a square matrix (Horner)."""
    a = _as_rows(z)
    r = len(a)
    out = [[Fraction(0)] * r for _ in range(r)]
    for c in poly:
        out = _matmul(out, a)
        c = to_fraction(c)
        for i in range(r):
            out[i][i] += c
    return out


def cayley_hamilton_check(z, poly: Sequence | None = None) -> bool:
    """True iff F(z) is exactly zero; F defaults to the characteristic polynomial."""
    F = char_poly(z) if poly is None else poly
    return all(x == 0 for row in poly_of_matrix(F, z) for x in row)


def leading_unit_check(poly: Sequence, localized_at_infinity: bool = False) -> bool:
    """Whether the leading coefficient is a unit of Z, i.e. +1 or -1.

    With ``localized_at_infinity`` the list is read as a section of O(m) with
    m = len(poly) - 1, so the leading entry is the value at infinity even when
    it is zero.
    """
    coeffs = [to_fraction(c) for c in poly]
    if not any(coeffs):
        raise DomainError("zero polynomial has no leading coefficient")
    if not localized_at_infinity:
        coeffs = coeffs[next(i for i, c in enumerate(coeffs) if c != 0):]
    return abs(coeffs[0]) == 1
