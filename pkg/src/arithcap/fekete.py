"""Explicit points with all conjugates in a supercritical adelic polydisk.

Given radii r with |r| > 1, rescale by ``v -> |alpha|_v**(1/n)`` for a rational
alpha built from the support primes so that every scaled radius is at least 1
and the archimedean one exceeds 1.  Points whose coordinates are
``zeta * alpha**(-1/n)`` with zeta a root of unity then have every conjugate
inside B(r): all conjugates of such a coordinate share the absolute value
``|alpha|_v**(-1/n)`` at every place.

Nothing irrational is materialized at finite places.  Comparisons there are
done on n-th powers, ``r(p)**n * |alpha|_p >= 1``, in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count as _count

from .adelic import INF, Place, RadiusAssignment, absolute_value, factorize, to_fraction
from .config import DEFAULT, Tolerances
from .errors import DimensionMismatch, DomainError, NotSupercritical, SearchExhausted

MAX_N = 10_000
SUPERCRITICAL_MARGIN = 1e-9


@dataclass(frozen=True)
class WitnessScaling:
    alpha: Fraction
    n: int
    radii: RadiusAssignment

    def __post_init__(self):
        alpha = to_fraction(self.alpha)
        if alpha == 0:
            raise DomainError("alpha must be nonzero")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "alpha", alpha)

    def places(self) -> list[Place]:
        primes = set(factorize(self.alpha.numerator)) | set(factorize(self.alpha.denominator))
        ps = {INF} | set(self.radii.places) | {Place(p) for p in primes}
        return sorted(ps, key=Place.sort_key)

    def scaled_nth_power(self, v: Place) -> Fraction:
        """(r(v) * |alpha|_v**(1/n))**n at a finite place, exactly."""
        if v.is_archimedean:
            raise ValueError("use scaled_log at the archimedean place")
        return self.radii(v) ** self.n * absolute_value(self.alpha, v)

    def scaled_log(self, v: Place) -> float:
        """ln of the scaled radius at v."""
        rv = self.radii(v)
        a = abs(self.alpha) if v.is_archimedean else absolute_value(self.alpha, v)
        log_r = math.log(rv) if v.is_archimedean else math.log(rv.numerator) - math.log(rv.denominator)
        return log_r + (math.log(a.numerator) - math.log(a.denominator)) / self.n

    @property
    def scaled_radii(self) -> dict[str, float]:
        """Scaled radius at every relevant place, as floats for reporting."""
        out = {}
        for v in self.places():
            a = abs(self.alpha) if v.is_archimedean else absolute_value(self.alpha, v)
            try:
                out[str(v)] = float(self.radii(v)) * float(a) ** (1 / self.n)
            except OverflowError:
                out[str(v)] = math.exp(self.scaled_log(v))
        return out

    def archimedean_exceeds_one(self) -> bool:
        """r(inf) * |alpha|**(1/n) > 1, decided exactly if the float test is close."""
        x = self.scaled_log(INF)
        if abs(x) > 1e-9:
            return x > 0
        return to_fraction(self.radii(INF)) ** self.n * abs(self.alpha) > 1

    def satisfies_invariants(self) -> bool:
        finite_ok = all(self.scaled_nth_power(v) >= 1 for v in self.places() if not v.is_archimedean)
        return finite_ok and self.archimedean_exceeds_one()


@dataclass(frozen=True)
class WitnessPoint:
    """Point with coordinates ``exp(2 pi i k / order) * alpha**(-1/n)``.

    ``coordinates`` is a tuple of (order, k) pairs.
    """

    coordinates: tuple
    alpha: Fraction
    n: int

    def __post_init__(self):
        coords = tuple((int(o), int(k)) for o, k in self.coordinates)
        if any(o < 1 for o, _ in coords):
            raise DomainError("root of unity order must be positive")
        alpha = to_fraction(self.alpha)
        if alpha == 0:
            raise DomainError("alpha must be nonzero")
        object.__setattr__(self, "coordinates", coords)
        object.__setattr__(self, "alpha", alpha)

    @property
    def d(self) -> int:
        return len(self.coordinates)

    def to_json(self) -> dict:
        return {
            "coordinates": [{"order": o, "index": k} for o, k in self.coordinates],
            "alpha": str(self.alpha),
            "n": self.n,
        }


def _floor_log(r: Fraction, p: int, n: int) -> int:
    """Largest integer e with p**e <= r**n."""
    x = n * (math.log(r.numerator) - math.log(r.denominator)) / math.log(p)
    e = math.floor(x)
    if abs(x - round(x)) > 1e-9 * max(1.0, abs(x)):
        return e
    # near an integer: settle exactly
    e = round(x) + 1
    rn = r**n
    while Fraction(p) ** e > rn:
        e -= 1
    return e


def find_scaling(r: RadiusAssignment, max_n: int = MAX_N) -> WitnessScaling:
    """Smallest n (with its alpha) that makes the scaled radii admissible.

    For each n the finite exponents ``e_p = floor(n log_p r(p))`` are the
    largest the finite places can absorb, so ``alpha = prod p**e_p`` is the
    best candidate for that n; it is accepted once the archimedean scaled
    radius exceeds 1.
    """
    log_norm = r.log_norm()
    if log_norm <= SUPERCRITICAL_MARGIN:
        raise NotSupercritical(f"|r| = {math.exp(log_norm)!r} is not > 1 (margin {SUPERCRITICAL_MARGIN})")
    finite = [(v.prime, value) for v, value in r.support if not v.is_archimedean]
    for n in range(1, max_n + 1):
        alpha = Fraction(1)
        for p, value in finite:
            alpha *= Fraction(p) ** _floor_log(value, p, n)
        s = WitnessScaling(alpha, n, r)
        if s.archimedean_exceeds_one():
            return s
    raise SearchExhausted(f"no scaling found with n <= {max_n}; |r| - 1 = {math.expm1(log_norm):.3e} is too small")


def verify_point(p: WitnessPoint, r: RadiusAssignment, tol: Tolerances = DEFAULT) -> bool:
    """Whether every conjugate of every coordinate lies in the disc of radius r(v).

    All conjugates of ``zeta * alpha**(-1/n)`` have absolute value
    ``|alpha|_v**(-1/n)``; the test is exact at finite places and has relative
    slack ``tol.archimedean`` at infinity.
    """
    if p.d != r.d:
        raise DimensionMismatch(f"point has {p.d} coordinates, radii have d={r.d}")
    if p.d == 0:
        return True
    scaling = WitnessScaling(p.alpha, p.n, r)
    for v in scaling.places():
        if v.is_archimedean:
            if scaling.scaled_log(v) < -tol.archimedean:
                return False
        elif scaling.scaled_nth_power(v) < 1:
            return False
    return True


def _root_sequence():
    """One primitive root of unity of each order 1, 2, 3, ..."""
    yield (1, 0)
    for order in _count(2):
        yield (order, 1)


def enumerate_witnesses(s: WitnessScaling, count: int) -> list[WitnessPoint]:
    """``count`` distinct root-of-unity points, scaled by ``alpha**(-1/n)``.

    Tuples are drawn from the roots of orders 1..k in order of increasing k,
    lexicographically within each k; every new tuple uses the order-k root.
    """
    if count < 0:
        raise DomainError("count must be nonnegative")
    d = s.radii.d
    out: list[WitnessPoint] = []
    roots = _root_sequence()
    pool: list[tuple[int, int]] = []
    while len(out) < count:
        pool.append(next(roots))
        k = len(pool) - 1
        for idx in _tuples_with_max(k, d):
            out.append(WitnessPoint(tuple(pool[i] for i in idx), s.alpha, s.n))
            if len(out) == count:
                break
    return out


def _tuples_with_max(k: int, d: int):
    """Index tuples in range(k+1)**d whose maximum is exactly k, lexicographic."""

    def rec(prefix, has_k):
        if len(prefix) == d:
            if has_k:
                yield tuple(prefix)
            return
        for i in range(k + 1):
            yield from rec(prefix + [i], has_k or i == k)

    yield from rec([], False)
