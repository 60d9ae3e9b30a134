"""Places of Q, normalized absolute values, and adelic radius assignments."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import DomainError, SchemaError

RationalLike = Union[int, Fraction, str]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division (desk-scale inputs)."""
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class Place:
    """A place of Q. ``prime is None`` means the archimedean place."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None:
            if isinstance(self.prime, bool) or not isinstance(self.prime, int):
                raise DomainError(f"place must be 'inf' or a prime, got {self.prime!r}")
            if not is_prime(self.prime):
                raise DomainError(f"{self.prime} is not prime")

    @classmethod
    def parse(cls, token) -> "Place":
        if isinstance(token, Place):
            return token
        if token in ("inf", "infinity", "oo", "∞", None):
            return cls(None)
        if isinstance(token, int) and not isinstance(token, bool):
            return cls(token)
        if isinstance(token, str) and token.strip().isdigit():
            return cls(int(token))
        raise SchemaError(f"cannot parse place {token!r}")

    @property
    def is_archimedean(self) -> bool:
        return self.prime is None

    def sort_key(self):
        return (0, 0) if self.prime is None else (1, self.prime)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INF = Place(None)


def to_fraction(q) -> Fraction:
    if isinstance(q, bool):
        raise DomainError(f"not a rational: {q!r}")
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    if isinstance(q, float):
        if not math.isfinite(q):
            raise DomainError(f"not a finite number: {q!r}")
        return Fraction(repr(q))
    if isinstance(q, str):
        try:
            return Fraction(q.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"cannot parse rational {q!r}") from None
    raise DomainError(f"not a rational: {q!r}")


def valuation(q: RationalLike, p: int) -> int:
    """ord_p(q) for nonzero rational q."""
    q = to_fraction(q)
    if q == 0:
        raise DomainError("valuation of zero is undefined")
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def absolute_value(q: RationalLike, v: Place) -> Fraction | float:
    """Normalized absolute value |q|_v.

    Exact ``Fraction`` at every place (the archimedean value of a rational is
    rational too); p-adic values are ``p**(-ord_p(q))``.
    """
    q = to_fraction(q)
    if q == 0:
        raise DomainError("absolute value of zero is not a positive real")
    if v.is_archimedean:
        return abs(q)
    return Fraction(v.prime) ** (-valuation(q, v.prime))


def support_places(q: RationalLike) -> list[Place]:
    """The archimedean place plus every prime dividing numerator or denominator."""
    q = to_fraction(q)
    if q == 0:
        raise DomainError("zero has no finite support")
    primes = set(factorize(q.numerator)) | set(factorize(q.denominator))
    return [INF] + [Place(p) for p in sorted(primes)]


def product_formula_check(q: RationalLike) -> Fraction:
    """Product of |q|_v over all places; equals 1 exactly for q != 0."""
    out = Fraction(1)
    for v in support_places(q):
        out *= absolute_value(q, v)
    return out


def _radius_value(place: Place, value) -> Fraction | float:
    if place.is_archimedean:
        x = float(to_fraction(value)) if isinstance(value, str) else float(value)
        if not math.isfinite(x) or x <= 0:
            raise DomainError(f"radius at {place} must be a positive real, got {value!r}")
        return x
    x = to_fraction(value)
    if x <= 0:
        raise DomainError(f"radius at {place} must be positive, got {value!r}")
    return x


@dataclass(frozen=True)
class RadiusAssignment:
    """A finitely supported map ``place -> r(v) > 0`` with r(v) = 1 off the support.

    Archimedean radii are floats, finite-place radii exact fractions.
    ``support`` is a tuple of (place, value) pairs in canonical place order.
    """

    d: int
    support: tuple = field(default=())

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise DomainError(f"dimension d must be a positive integer, got {self.d!r}")
        seen = {}
        for place, value in self.support:
            place = Place.parse(place)
            if place in seen:
                raise DomainError(f"place {place} listed twice")
            seen[place] = _radius_value(place, value)
        object.__setattr__(self, "support", tuple(sorted(seen.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def from_mapping(cls, d: int, mapping: Mapping | Iterable = ()) -> "RadiusAssignment":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(d, tuple((Place.parse(k), v) for k, v in items))

    @classmethod
    def unit(cls, d: int) -> "RadiusAssignment":
        return cls(d, ())

    def __call__(self, v: Place) -> Fraction | float:
        for place, value in self.support:
            if place == v:
                return value
        return 1.0 if v.is_archimedean else Fraction(1)

    @property
    def places(self) -> list[Place]:
        return [p for p, _ in self.support]

    def finite_part(self) -> Fraction:
        """Exact product of the finite-place radii."""
        out = Fraction(1)
        for place, value in self.support:
            if not place.is_archimedean:
                out *= value
        return out

    def log_norm(self) -> float:
        """ln |r|, summed place by place to avoid overflow."""
        total = 0.0
        for place, value in self.support:
            if place.is_archimedean:
                total += math.log(value)
            else:
                total += math.log(value.numerator) - math.log(value.denominator)
        return total

    def __mul__(self, other: "RadiusAssignment") -> "RadiusAssignment":
        if self.d != other.d:
            raise DomainError("cannot multiply radius assignments of different dimension")
        places = sorted(set(self.places) | set(other.places), key=Place.sort_key)
        return RadiusAssignment(self.d, tuple((v, self(v) * other(v)) for v in places))

    def to_json(self) -> list[dict]:
        out = []
        for place, value in self.support:
            out.append({"place": str(place), "value": value if place.is_archimedean else str(value)})
        return out


def radius_norm(r: RadiusAssignment) -> float:
    """|r| = product of r(v) over all places."""
    try:
        out = float(r(INF)) * float(r.finite_part())
    except OverflowError:
        out = math.inf
    if out == 0.0 or math.isinf(out):
        x = r.log_norm()
        return math.inf if x > 709.78 else math.exp(x)
    return out
