"""Closed-form sectional capacities of adelic polydisks and their pullbacks.

A finite morphism to projective d-space is abstracted by its degree and the
multiplicity m with which it pulls the hyperplane at infinity back onto the
boundary divisor.  Whether a pullback polydisk lies inside a given adelic set
is geometry the caller certifies; this module only evaluates values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple

from .adelic import RadiusAssignment, radius_norm
from .config import DEFAULT, Tolerances
from .errors import DimensionMismatch, DomainError


def _positive_int(name: str, x) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise DomainError(f"{name} must be a positive integer, got {x!r}")
    return x


@dataclass(frozen=True)
class MorphismDescriptor:
    d: int
    degree: int
    multiplicity: int
    divisor_degree: float | Fraction | None = None

    def __post_init__(self):
        _positive_int("d", self.d)
        _positive_int("degree", self.degree)
        _positive_int("multiplicity", self.multiplicity)
        if self.divisor_degree is not None:
            if self.divisor_degree <= 0:
                raise DomainError(f"divisor_degree must be positive, got {self.divisor_degree!r}")
            if self.d == 1 and abs(self.multiplicity * self.divisor_degree - self.degree) > 1e-12 * self.degree:
                raise DomainError(
                    f"on a curve multiplicity * divisor_degree must equal degree "
                    f"({self.multiplicity} * {self.divisor_degree} != {self.degree})"
                )

    @property
    def exponent(self) -> Fraction:
        """d * deg / m**(d+1), the power of |r| in the pullback capacity."""
        return Fraction(self.d * self.degree, self.multiplicity ** (self.d + 1))


@dataclass(frozen=True)
class PullbackCandidate:
    morphism: MorphismDescriptor
    radii: RadiusAssignment

    def __post_init__(self):
        if self.radii.d != self.morphism.d:
            raise DimensionMismatch(f"radii have d={self.radii.d}, morphism has d={self.morphism.d}")


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def _norm_power(r: RadiusAssignment, e: float) -> float:
    """|r| ** e, by direct power when that stays finite and nonzero, else in log space."""
    base = radius_norm(r)
    if 0.0 < base < math.inf:
        try:
            out = base**e
        except OverflowError:
            out = math.inf
        if 0.0 < out < math.inf:
            return out
    return _exp(e * r.log_norm())


def polydisk_sectional_capacity(d: int, r: RadiusAssignment) -> float:
    """S(B(r), H) = |r|**d on projective d-space."""
    _positive_int("d", d)
    if r.d != d:
        raise DimensionMismatch(f"radius assignment has d={r.d}, expected {d}")
    return _norm_power(r, d)


def pullback_sectional_capacity(c: PullbackCandidate) -> float:
    """|r| ** (d * deg / m**(d+1))."""
    return _norm_power(c.radii, float(c.morphism.exponent))


def finite_morphism_capacity_lower_bound(
    candidates: Iterable[PullbackCandidate],
    contained: Callable[[PullbackCandidate], bool] | Iterable[bool],
) -> float:
    """Supremum of pullback capacities over the certified candidates (0 if none).

    ``contained`` is either a predicate or a parallel sequence of booleans
    certifying that each candidate's pullback polydisk lies in the target set.
    """
    candidates = list(candidates)
    if callable(contained):
        flags = [bool(contained(c)) for c in candidates]
    else:
        flags = [bool(f) for f in contained]
        if len(flags) != len(candidates):
            raise DimensionMismatch(f"{len(flags)} certificates for {len(candidates)} candidates")
    best = 0.0
    for c, ok in zip(candidates, flags):
        if ok:
            best = max(best, pullback_sectional_capacity(c))
    return best


def adjusted_exponent(d: int, divisor_degree) -> float:
    """divisor_degree ** (-(d+1)/d), the normalizing power attached to a divisor."""
    _positive_int("d", d)
    if divisor_degree <= 0:
        raise DomainError(f"divisor degree must be positive, got {divisor_degree!r}")
    try:
        return float(divisor_degree) ** (-(d + 1) / d)
    except OverflowError:
        return _exp(-(d + 1) / d * math.log(divisor_degree))


class IdentityCheck(NamedTuple):
    lhs: float
    rhs: float
    passed: bool


def curve_pullback_identity_check(
    degree: int, multiplicity: int, r: RadiusAssignment, tol: Tolerances = DEFAULT
) -> IdentityCheck:
    """Compare the normalized pullback capacity of a curve map with |r|**(1/deg).

    The left side raises |r|**(deg/m**2) to the adjusted exponent of the
    divisor of degree deg/m; the right side is evaluated directly.
    """
    _positive_int("degree", degree)
    _positive_int("multiplicity", multiplicity)
    if degree % multiplicity:
        raise DomainError(f"multiplicity {multiplicity} does not divide degree {degree}")
    if r.d != 1:
        raise DimensionMismatch(f"curve identity needs d=1 radii, got d={r.d}")
    morphism = MorphismDescriptor(1, degree, multiplicity, Fraction(degree, multiplicity))
    value = pullback_sectional_capacity(PullbackCandidate(morphism, r))
    lhs = value ** adjusted_exponent(1, Fraction(degree, multiplicity))
    rhs = radius_norm_power(r, Fraction(1, degree))
    passed = abs(lhs - rhs) <= tol.check * max(abs(lhs), abs(rhs))
    return IdentityCheck(lhs, rhs, passed)


def radius_norm_power(r: RadiusAssignment, power) -> float:
    return _norm_power(r, float(power))


def theorem_compare_check(fm_lower_bound: float, sectional: float, tol: Tolerances = DEFAULT) -> bool:
    """True iff the finite-morphism lower bound does not exceed the sectional capacity."""
    return fm_lower_bound <= sectional * (1.0 + tol.check)


def relative_equal(a: float, b: float, rel: float) -> bool:
    return abs(a - b) <= rel * max(abs(a), abs(b))
