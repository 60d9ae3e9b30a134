"""Randomized acceptance checks, each paired with an independent oracle.

Every check draws from a fixed seed so runs are reproducible.  ``scale``
shrinks the case counts (``scale=0.1`` for a quick smoke run); the stated
tolerances never change.
"""

from __future__ import annotations

import functools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

import mpmath
import numpy as np

from . import capacity, fekete, green, oracle, skolem
from .adelic import INF, Place, RadiusAssignment, absolute_value, factorize, product_formula_check
from .errors import SearchExhausted
from .game import game_value, shifted_value

PRIMES_TO_100 = [p for p in range(2, 101) if all(p % q for q in range(2, int(p**0.5) + 1))]


@dataclass
class Outcome:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} [{self.number:2d}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _n(count: int, scale: float) -> int:
    return max(1, int(round(count * scale)))


def random_radii(rng: np.random.Generator, d: int, max_places: int = 6, lo=1e-3, hi=1e3) -> RadiusAssignment:
    """Up to ``max_places`` places from {inf} and primes <= 100, log-uniform values."""
    k = int(rng.integers(0, max_places + 1))
    pool = [INF] + [Place(p) for p in PRIMES_TO_100]
    chosen = [pool[i] for i in rng.choice(len(pool), size=k, replace=False)]
    support = []
    for v in chosen:
        x = float(math.exp(rng.uniform(math.log(lo), math.log(hi))))
        support.append((v, x if v.is_archimedean else Fraction(x).limit_denominator(1000) or Fraction(1, 1000)))
    return RadiusAssignment(d, tuple(support))


def _relerr(a, b) -> float:
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    return float(abs(a - b) / max(abs(a), abs(b)))


# 1
def check_counter_fixture(scale: float = 1.0) -> Outcome:
    G = green.GreensMatrix([[math.log(2)]])
    green.cantor_rumely_capacity(G)  # warm caches before timing
    t0 = time.perf_counter()
    s_gamma = green.sectional_capacity_from_weights(G, [1.0])
    gamma_cr = green.cantor_rumely_capacity(G)
    ms = (time.perf_counter() - t0) * 1e3
    ok = abs(s_gamma - 0.5) <= 1e-12 and abs(gamma_cr - 0.5) <= 1e-12 and ms < 10
    return Outcome(1, "counter fixture", ok, f"S_gamma={s_gamma!r} gamma_CR={gamma_cr!r} in {ms:.3f} ms")


# 2
def check_polydisk(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(_n(1000, scale)):
        d = int(rng.integers(1, 6))
        r = random_radii(rng, d)
        got = capacity.polydisk_sectional_capacity(d, r)
        worst = max(worst, _relerr(got, oracle.mp_polydisk_capacity(d, r)))
    return Outcome(2, "polydisk |r|^d vs 50-digit recomputation", worst <= 1e-12, f"max rel err {worst:.2e}")


# 3
def check_curve_identity(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(3)
    worst, fails = 0.0, 0
    for _ in range(_n(1000, scale)):
        degree = int(rng.integers(1, 51))
        divisors = [m for m in range(1, degree + 1) if degree % m == 0]
        mult = int(rng.choice(divisors))
        target = math.exp(rng.uniform(math.log(1e-3), math.log(1e3)))
        r = random_radii(rng, 1, max_places=5)
        # put the remaining mass at infinity so that |r| = target
        arch = target / float(r.finite_part())
        r = RadiusAssignment(1, tuple((v, x) for v, x in r.support if not v.is_archimedean) + ((INF, arch),))
        chk = capacity.curve_pullback_identity_check(degree, mult, r)
        worst = max(worst, _relerr(chk.lhs, chk.rhs))
        fails += not chk.passed
    ok = worst <= 1e-12 and fails == 0
    return Outcome(3, "curve pullback identity", ok, f"max rel err {worst:.2e}, {fails} failures")


def random_interior_negative_definite(rng: np.random.Generator, n: int):
    """A negative definite G with a prescribed interior maximizer.

    Starting from a random SPD A0 and a target s in the open simplex,
    ``A = A0 - (A0 s)(A0 s)^T / (s^T A0 s) + mu 1 1^T`` is positive definite
    with ``A s = mu 1``; G = -A.  Half the cases carry a Galois structure
    (pairs of swapped indices) with A0 and s made invariant.
    """
    B = rng.normal(size=(n, n))
    A0 = B @ B.T + 0.5 * np.eye(n)
    s = rng.uniform(0.2, 1.0, size=n)
    orbits, gens = None, ()
    if n >= 2 and rng.random() < 0.5:
        perm = list(range(n))
        perm[0], perm[1] = 1, 0
        if n == 4:
            perm[2], perm[3] = 3, 2
        P = np.eye(n)[perm]
        A0 = (A0 + P @ A0 @ P.T) / 2
        s = (s + s[perm]) / 2
        orbits = [[0, 1]] + ([[2, 3]] if n == 4 else [[i] for i in range(2, n)])
        gens = (tuple(perm),)
    s = s / s.sum()
    mu = float(rng.uniform(0.1, 3.0))
    v = A0 @ s
    A = A0 - np.outer(v, v) / (s @ v) + mu * np.ones((n, n))
    A = (A + A.T) / 2
    if gens:
        # the permutation is an involution, so one average is exactly invariant
        A = (A + A[np.ix_(gens[0], gens[0])]) / 2
    return green.GreensMatrix(-A, orbits, gens), s, -mu


# 4
def check_equilibrium(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(4)
    t0 = time.perf_counter()
    stats = dict(resid=0.0, val=0.0, grid=0.0, cap=0.0, truth=0.0)
    bad = 0
    for k in range(_n(200, scale)):
        n = k % 4 + 1
        G, s_true, lam_true = random_interior_negative_definite(rng, n)
        grid = oracle.grid_max_quadratic(G.entries)  # oracle first, independent route
        eq = green.equilibrium_weights(G)
        s_hat = eq.s_hat.values
        Gs = G.entries @ s_hat
        stats["resid"] = max(stats["resid"], float(Gs.max() - Gs.min()))
        stats["val"] = max(stats["val"], abs(eq.lam - game_value(G.entries).value))
        stats["grid"] = max(stats["grid"], abs(eq.lam - grid.value))
        stats["cap"] = max(stats["cap"], _relerr(green.s_plus_support(G), green.cantor_rumely_capacity(G)))
        stats["truth"] = max(stats["truth"], abs(eq.lam - lam_true), float(np.abs(s_hat - s_true).max()))
        bad += grid.value > eq.lam + 1e-12
    secs = time.perf_counter() - t0
    ok = (
        stats["resid"] <= 1e-9
        and stats["val"] <= 1e-6
        and stats["grid"] <= 2e-3
        and stats["cap"] <= 1e-6
        and bad == 0
        and secs < 60
    )
    detail = (
        f"spread(G s)={stats['resid']:.1e} |lam-Val|={stats['val']:.1e} |lam-grid|={stats['grid']:.1e} "
        f"S+/gamma_CR rel={stats['cap']:.1e} vs construction={stats['truth']:.1e} grid>lam:{bad}"
    )
    return Outcome(4, "equilibrium weights", ok, detail, secs)


# 5
def check_game_engine(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(5)
    worst_cf = worst_shift = 0.0
    for _ in range(_n(1000, scale)):
        G = rng.uniform(-10, 10, size=(2, 2))
        worst_cf = max(worst_cf, abs(game_value(G).value - oracle.game_value_2x2(G)))
    for _ in range(_n(1000, scale)):
        n = int(rng.integers(1, 6))
        G = rng.uniform(-10, 10, size=(n, n))
        c = float(rng.uniform(-10, 10))
        worst_shift = max(worst_shift, abs(shifted_value(G, c) - game_value(G).value - c))
    ok = worst_cf <= 1e-8 and worst_shift <= 1e-8
    return Outcome(5, "game engine", ok, f"2x2 closed form err {worst_cf:.1e}, shift err {worst_shift:.1e}")


def _shrunk(rng, r: RadiusAssignment, strict: bool) -> RadiusAssignment:
    """Pointwise smaller radii; strictly smaller at one place when ``strict``."""
    places = r.places or [INF]
    hit = places[int(rng.integers(len(places)))]
    out = []
    for v in sorted(set(places) | {hit}, key=Place.sort_key):
        x = r(v)
        f = float(rng.uniform(0.5, 0.999)) if (v == hit and strict) or rng.random() < 0.3 else 1.0
        out.append((v, x * f if v.is_archimedean else x * Fraction(f).limit_denominator(1000)))
    return RadiusAssignment(r.d, tuple(out))


# 6
def check_compare_harness(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(6)
    worst_eq, violations = 0.0, 0
    for phase in ("equality", "strict"):
        for _ in range(_n(100, scale)):
            d = int(rng.integers(1, 4))
            morph = capacity.MorphismDescriptor(d, int(rng.integers(1, 9)), int(rng.integers(1, 4)))
            target = capacity.PullbackCandidate(morph, random_radii(rng, d))
            sectional = capacity.pullback_sectional_capacity(target)
            cands = [capacity.PullbackCandidate(morph, _shrunk(rng, target.radii, True)) for _ in range(3)]
            flags = [True] * len(cands)
            if phase == "equality":
                cands.append(target)
                flags.append(True)
            # an uncertified candidate with a larger value must be ignored
            big = capacity.PullbackCandidate(capacity.MorphismDescriptor(d, 1, 1), RadiusAssignment(d, ((INF, 1e6),)))
            cands.append(big)
            flags.append(False)
            bound = capacity.finite_morphism_capacity_lower_bound(cands, flags)
            if phase == "equality":
                worst_eq = max(worst_eq, _relerr(bound, sectional))
            violations += not capacity.theorem_compare_check(bound, sectional)
    ok = worst_eq <= 1e-12 and violations == 0
    return Outcome(6, "finite-morphism bound vs sectional capacity", ok, f"equality err {worst_eq:.1e}, {violations} violations")


# 7
def check_trick(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(7)
    not_injective = 0
    for _ in range(_n(500, scale)):
        n = int(rng.integers(1, 5))
        size = int(rng.integers(1, 26))
        pts = {tuple(int(x) for x in rng.integers(0, 21, size=n)) for _ in range(size)}
        m = skolem.monomial_exponents(skolem.ExponentSet(n, tuple(sorted(pts))))
        images = {p: sum(mi * xi for mi, xi in zip(m, p)) for p in pts}
        not_injective += any(images[a] == images[b] for a, b in combinations(pts, 2)) or m[0] != 1 or min(m) < 1
    not_preserved = 0
    for _ in range(_n(100, scale)):
        n = int(rng.integers(1, 5))
        pts = {tuple(int(x) for x in rng.integers(0, 21, size=n)) for _ in range(int(rng.integers(1, 26)))}
        poly = {p: int(rng.choice([-1, 1])) * int(rng.integers(1, 10)) for p in pts}
        m = skolem.monomial_exponents(skolem.ExponentSet(n, tuple(sorted(pts))))
        uni = skolem.substitute_monomials(poly, m)
        not_preserved += sorted(c for c in uni if c != 0) != sorted(Fraction(c) for c in poly.values())
    ok = not_injective == 0 and not_preserved == 0
    return Outcome(7, "injective monomial form", ok, f"{not_injective} non-injective, {not_preserved} coefficient mismatches")


# 8
def check_cayley_hamilton(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(8)
    fails = mismatches = 0
    for _ in range(_n(200, scale)):
        r = int(rng.integers(1, 7))
        z = [[Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5))) for _ in range(r)] for _ in range(r)]
        F = skolem.char_poly(z)
        fails += not skolem.cayley_hamilton_check(z, F)
        xs = range(r + 1)
        horner = [sum((c * Fraction(x) ** (r - i) for i, c in enumerate(F)), Fraction(0)) for x in xs]
        mismatches += horner != oracle.char_poly_values(z, xs)
    perturbed = skolem.char_poly([[1]])
    perturbed[-1] += 1
    control_rejected = not skolem.cayley_hamilton_check([[1]], perturbed)
    ok = fails == 0 and mismatches == 0 and control_rejected
    return Outcome(
        8, "Cayley-Hamilton", ok,
        f"{fails} nonzero F(z), {mismatches} det(xI-z) mismatches, negative control rejected={control_rejected}",
    )


# 9
def check_product_formula(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(9)
    bad = 0
    for _ in range(_n(1000, scale)):
        num = int(rng.integers(1, 10**9)) * int(rng.choice([-1, 1]))
        den = int(rng.integers(1, 10**9))
        q = Fraction(num, den)
        bad += product_formula_check(q) != 1
        # multiplicativity at a random prime
        p = Place(int(rng.choice(PRIMES_TO_100)))
        q2 = Fraction(int(rng.integers(1, 10**6)), int(rng.integers(1, 10**6)))
        bad += absolute_value(q, p) * absolute_value(q2, p) != absolute_value(q * q2, p)
    return Outcome(9, "product formula", bad == 0, f"{bad} exact failures")


def supercritical_radii(rng: np.random.Generator, d: int) -> RadiusAssignment:
    while True:
        r = random_radii(rng, d)
        if r.log_norm() >= math.log1p(1e-6):
            return r


# 10
def check_fekete(scale: float = 1.0) -> Outcome:
    rng = np.random.default_rng(10)
    bad, exhausted, max_n = 0, 0, 0
    for _ in range(_n(200, scale)):
        d = int(rng.integers(1, 4))
        r = supercritical_radii(rng, d)
        try:
            s = fekete.find_scaling(r)
        except SearchExhausted:
            exhausted += 1
            continue
        max_n = max(max_n, s.n)
        # exact recheck without the scaling's own helpers
        alpha, n = s.alpha, s.n
        for v in set(r.places) | {Place(p) for p in _primes_of(alpha)}:
            if not v.is_archimedean:
                nth = Fraction(r(v)) ** n * absolute_value(alpha, v)
                bad += nth < 1
        arch_nth = Fraction(r(INF)) ** n * abs(alpha)
        bad += not arch_nth > 1
        pts = fekete.enumerate_witnesses(s, 10)
        bad += len({p.coordinates for p in pts}) != 10
        bad += not all(fekete.verify_point(p, r) for p in pts)
    ok = bad == 0 and exhausted == 0 and max_n <= 10_000
    return Outcome(10, "Fekete witness scaling", ok, f"{bad} invariant failures, {exhausted} exhausted, max n={max_n}")


def _primes_of(q: Fraction) -> set[int]:
    return set(factorize(q.numerator)) | set(factorize(q.denominator))


def _timed(check: Callable[[float], Outcome]) -> Callable[[float], Outcome]:
    """Fill in wall time for checks that do not measure it themselves."""

    @functools.wraps(check)
    def run(scale: float = 1.0) -> Outcome:
        t0 = time.perf_counter()
        res = check(scale)
        if not res.seconds:
            res.seconds = time.perf_counter() - t0
        return res

    return run


CRITERIA: list[Callable[[float], Outcome]] = [
    check_counter_fixture,
    check_polydisk,
    check_curve_identity,
    check_equilibrium,
    check_game_engine,
    check_compare_harness,
    check_trick,
    check_cayley_hamilton,
    check_product_formula,
    check_fekete,
]
CRITERIA = [_timed(c) for c in CRITERIA]


def run_all(scale: float = 1.0, echo: Callable[[str], None] | None = None) -> list[Outcome]:
    out = []
    for check in CRITERIA:
        res = check(scale)
        out.append(res)
        if echo:
            echo(res.line())
    return out
