"""Theorem-level verification of Bohr-type inequalities.

Each theorem is described by its radius, a sampler producing members of the
function class it covers, an optional extremal family, and the functional on
the left-hand side. :func:`verify_theorem` evaluates every case over a grid
``[0, radius]``; tails are added to the left-hand side only, and the verdict is
``Pass`` if the certified margin ``rhs - lhs - tail`` is non-negative up to a
floating-point allowance everywhere on the grid. The sharpness probe checks
that the extremal family violates the inequality just above the radius and
locates the crossing.
"""
from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import radii, zoo
from .errors import DomainError, HypothesisViolation
from .series import DEFAULT_ORDER, Bounded, TaylorSeries

DEFAULT_SEED = 0xB042
DEFAULT_GRID = 128
SHARPNESS_OFFSET = 1e-3
CROSSING_TOL = 1e-4
# margins are compared against -ROUNDOFF * max(1, rhs): roundoff of a few hundred terms
ROUNDOFF = 1e-12


class Theorem(enum.Enum):
    TH1_2_1 = "th1_2_1"
    TH1_2_2 = "th1_2_2"
    TH1_3_1 = "th1_3_1"
    TH1_3_2 = "th1_3_2"
    TH4_1 = "th4_1"
    TH4_2 = "th4_2"
    TH5_4 = "th5_4"
    CONJ_A = "conj_a"
    CONJ_B = "conj_b"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise HypothesisViolation(f"unknown theorem id {value!r}") from None


class FunctionalKind(enum.Enum):
    HARMONIC_BOHR_SUM = "harmonic_bohr_sum"
    REFINED_TF = "refined_tf"
    DERIVATIVE_MAJORANT = "derivative_majorant"


@dataclass(frozen=True)
class TheoremParams:
    k: float = 0.0
    lambda_dist: float | None = None
    # th4_1 only: verify up to r_0(lambda) instead of r_*
    use_r0: bool = False


# -- functionals ------------------------------------------------------------------


def bohr_sum(f: zoo.HarmonicMap, r, skip_b1=False):
    """``sum_{n>=1} (|a_n| + |b_n|) r**n`` (b_1 dropped with ``skip_b1``), with tail."""
    a = f.h.majorant_with_tail(r, skip_constant=True)
    b = f.g.majorant_with_tail(r, skip_constant=True)
    value = a.value + b.value
    if skip_b1:
        value = value - abs(f.g.coeffs[1]) * np.asarray(r)
    return Bounded(value, a.tail + b.tail)


def refined_tf(f: zoo.HarmonicMap, r, lambda_dist):
    """Bohr sum plus ``(1/(2-lambda) + r/(1-r)) * sum (|a_n|**2 + |b_n|**2) r**(2n)``."""
    if not 0 < lambda_dist < 1:
        raise DomainError(f"lambda_dist must lie in (0, 1), got {lambda_dist}")
    s = bohr_sum(f, r)
    nh = f.h.squared_norm_with_tail(r)
    ng = f.g.squared_norm_with_tail(r)
    r = np.asarray(r, dtype=float)
    w = 1 / (2 - lambda_dist) + r / (1 - r)
    return Bounded(s.value + w * (nh.value + ng.value), s.tail + w * (nh.tail + ng.tail))


def refined_tf_analytic(phi: TaylorSeries, r, lambda_dist):
    """The same functional for an analytic function (g = 0)."""
    g = TaylorSeries.zero(phi.order)
    return refined_tf(zoo.HarmonicMap(phi, g, 0.0), r, lambda_dist)


def derivative_majorant(f: TaylorSeries, r):
    return f.differentiate().majorant_with_tail(r)


@dataclass(frozen=True)
class BohrFunctional:
    kind: FunctionalKind
    skip_b1: bool = False
    lambda_dist: float | None = None

    def __post_init__(self):
        if self.kind is FunctionalKind.REFINED_TF and not (
            self.lambda_dist is not None and 0 < self.lambda_dist < 1
        ):
            raise HypothesisViolation("the refined functional needs lambda_dist in (0, 1)")

    def __call__(self, f, r):
        if self.kind is FunctionalKind.HARMONIC_BOHR_SUM:
            return bohr_sum(f, r, self.skip_b1)
        if self.kind is FunctionalKind.REFINED_TF:
            return refined_tf(f, r, self.lambda_dist)
        return derivative_majorant(f, r)


# -- cases --------------------------------------------------------------------------


@dataclass
class Case:
    label: str
    lhs: Callable[[np.ndarray], Bounded]
    rhs: Callable[[np.ndarray], np.ndarray]

    def evaluate(self, r):
        r = np.atleast_1d(np.asarray(r, dtype=float))
        b = self.lhs(r)
        value = np.broadcast_to(np.asarray(b.value, dtype=float), r.shape)
        tail = np.broadcast_to(np.asarray(b.tail, dtype=float), r.shape)
        rhs = np.broadcast_to(np.asarray(self.rhs(r), dtype=float), r.shape)
        return value, tail, rhs


def _const(c):
    return lambda r: np.full(np.shape(r), float(c))


def _random_scale(rng):
    return math.exp(rng.uniform(math.log(0.25), math.log(4.0))) * np.exp(2j * np.pi * rng.random())


def _random_center(rng):
    return complex(rng.normal(), rng.normal())


_TARGETS = {
    Theorem.TH1_2_1: zoo.koebe_like,
    Theorem.TH1_2_2: zoo.halfplane_like,
    Theorem.TH1_3_1: zoo.halfplane_like,
    Theorem.TH1_3_2: zoo.koebe_like,
    Theorem.TH4_1: zoo.halfplane_like,
    Theorem.TH4_2: zoo.koebe_like,
}


def _harmonic_case(theorem, params, rng, index, order):
    """A member of the class covered by ``theorem`` (index 0 is the deterministic one)."""
    target = _TARGETS[theorem]
    refined = theorem in (Theorem.TH4_1, Theorem.TH4_2)
    subordinate = theorem in (Theorem.TH1_3_1, Theorem.TH1_3_2)
    ident = TaylorSeries.identity(order)
    one = TaylorSeries.constant(1.0, order)
    if refined:
        lam = params.lambda_dist
        # dist = |scale|/4 (univalent) or |scale|/2 (convex) equals lambda
        mult = 4 * lam if target is zoo.koebe_like else 2 * lam
        unit = 1.0 if index == 0 else np.exp(2j * np.pi * rng.random())
        model = target(0.0 if index == 0 else _random_center(rng), mult * unit, order)
    elif index == 0:
        model = target(0.0, 1.0, order)
    else:
        model = target(_random_center(rng), _random_scale(rng), order)
    if index == 0:
        omega, factor, d, f0 = ident, one, one, 0.0
    else:
        omega = zoo.random_schwarz(rng, True, order)
        factor = zoo.random_self_map(rng, order)
        d = zoo.random_self_map(rng, order)
        f0 = _random_center(rng)
    if subordinate:
        h = model.subordinate(omega)
        d = d.mul_z().truncate(order).with_bound(d.bound)
    else:
        h = zoo.quasi_subordinate_pair(model.phi, factor, omega, f0)
    k = 1.0 if refined else params.k
    f = zoo.harmonic_from_dilatation(h, d, k, label=f"{theorem.value}#{index}")
    if refined:
        lam = params.lambda_dist
        return Case(f.label, lambda r: refined_tf(f, r, lam), _const(lam))
    return Case(f.label, lambda r: bohr_sum(f, r, skip_b1=subordinate), _const(model.dist_to_boundary))


def _derivative_case(rng, index, order):
    if index == 0:
        g = zoo.halfplane_like(0.0, 1.0, order).phi
        omega = TaylorSeries.identity(order)
        factor = TaylorSeries.constant(1.0, order)
        f0 = 0.0
    else:
        pick = rng.integers(3)
        if pick == 0:
            g = zoo.koebe_like(_random_center(rng), _random_scale(rng), order).phi
        elif pick == 1:
            g = zoo.halfplane_like(_random_center(rng), _random_scale(rng), order).phi
        else:
            deg = int(rng.integers(1, 9))
            g = TaylorSeries(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1), order)
        omega = zoo.random_schwarz(rng, True, order)
        factor = zoo.random_self_map(rng, order)
        f0 = _random_center(rng)
    f = zoo.quasi_subordinate_pair(g, factor, omega, f0)
    gp = g.differentiate()
    return Case(f"th5_4#{index}", lambda r: derivative_majorant(f, r), lambda r: gp.majorant_at(r))


def _extremal_case(theorem, params, order):
    if theorem is Theorem.TH5_4:
        # f = z(z-a)/(1-az) against g = z, a -> 1
        omega = zoo.blaschke_schwarz([zoo.LAMBDA_PROBE], 1.0, True, order)
        return Case("extremal:th5_4", lambda r: derivative_majorant(omega, r), _const(1.0))
    style = zoo.ExtremalStyle(theorem.value)
    f = zoo.extremal_harmonic(style, params.k, zoo.LAMBDA_PROBE, order)
    rhs = zoo.extremal_target(style, order=order).dist_to_boundary
    skip = theorem in (Theorem.TH1_3_1, Theorem.TH1_3_2)
    return Case(f.label, lambda r: bohr_sum(f, r, skip_b1=skip), _const(rhs))


# -- theorem table ----------------------------------------------------------------------


def _normalize(theorem, params):
    theorem = Theorem.parse(theorem)
    params = params or TheoremParams()
    if theorem is Theorem.CONJ_A:
        return Theorem.TH1_3_1, TheoremParams(k=1.0)
    if theorem is Theorem.CONJ_B:
        return Theorem.TH1_3_2, TheoremParams(k=1.0)
    if not 0 <= params.k <= 1:
        raise HypothesisViolation(f"k must lie in [0, 1], got {params.k}")
    if theorem in (Theorem.TH4_1, Theorem.TH4_2):
        lam = params.lambda_dist
        if lam is None or not 0 < lam < 1:
            raise HypothesisViolation(f"{theorem.value} needs lambda_dist = dist in (0, 1), got {lam}")
    return theorem, params


def theorem_radius(theorem, params=None):
    """Radius up to which the theorem asserts its inequality."""
    theorem, params = _normalize(theorem, params)
    k = params.k
    if theorem is Theorem.TH1_2_1:
        return radii.r_u_closed_form(k)
    if theorem is Theorem.TH1_2_2:
        return 1 / (3 + 2 * k)
    if theorem is Theorem.TH1_3_1:
        return radii.radius("liu16", k)
    if theorem is Theorem.TH1_3_2:
        return radii.radius("liu17", k)
    if theorem is Theorem.TH4_1:
        if params.use_r0:
            return radii.solve_r0_of_lambda(params.lambda_dist)
        return radii.radius("rstar")
    if theorem is Theorem.TH4_2:
        return radii.radius("rustar")
    return radii.derivative_bohr_radius()


def has_extremal(theorem):
    return _normalize(theorem, TheoremParams(k=0.0, lambda_dist=0.5))[0] not in (
        Theorem.TH4_1,
        Theorem.TH4_2,
    )


def theorem_cases(theorem, params=None, trials=1, seed=DEFAULT_SEED, order=DEFAULT_ORDER):
    """Deterministic case first, then ``trials - 1`` random class members."""
    theorem, params = _normalize(theorem, params)
    rng = np.random.default_rng(seed)
    for i in range(trials):
        if theorem is Theorem.TH5_4:
            yield _derivative_case(rng, i, order)
        else:
            yield _harmonic_case(theorem, params, rng, i, order)


def extremal_case(theorem, params=None, order=DEFAULT_ORDER):
    theorem, params = _normalize(theorem, params)
    if theorem in (Theorem.TH4_1, Theorem.TH4_2):
        return None
    return _extremal_case(theorem, params, order)


# -- reports -----------------------------------------------------------------------------


@dataclass(frozen=True)
class GridPoint:
    r: float
    lhs: float
    rhs: float
    margin: float
    tail: float
    case: str


@dataclass(frozen=True)
class SharpnessProbe:
    r_above: float
    violation: float
    crossing: float | None
    crossing_error: float | None

    @property
    def ok(self):
        return self.violation > 0 and self.crossing_error is not None and abs(self.crossing_error) <= CROSSING_TOL


@dataclass
class VerificationReport:
    theorem_id: str
    params: dict
    radius: float
    grid: list = field(default_factory=list)
    verdict: str = "Pass"
    witness: float | None = None
    witness_case: str | None = None
    sharpness: SharpnessProbe | None = None
    seed: int = DEFAULT_SEED
    trials: int = 0
    order: int = DEFAULT_ORDER
    min_certified_margin: float = math.inf

    @property
    def passed(self):
        return self.verdict == "Pass"

    @property
    def sharpness_ok(self):
        return self.sharpness is None or self.sharpness.ok

    def to_dict(self):
        d = asdict(self)
        d["grid"] = [asdict(p) for p in self.grid]
        return d


def _allowance(rhs):
    return ROUNDOFF * np.maximum(1.0, np.abs(rhs))


def sharpness_probe(case: Case, radius, offset=SHARPNESS_OFFSET, window=1e-2):
    """Violation just above the radius and the located crossing ``lhs = rhs``."""

    def gap(r):
        v, _, rhs = case.evaluate(r)
        return float(v[0] - rhs[0])

    r_above = radius * (1 + offset)
    violation = gap(r_above)
    crossing = None
    lo, hi = radius * (1 - window), radius * (1 + window)
    try:
        crossing = radii.find_root(gap, lo, hi).value
    except Exception:  # no sign change inside the window
        crossing = None
    err = None if crossing is None else crossing - radius
    return SharpnessProbe(r_above, violation, crossing, err)


def verify_theorem(
    theorem,
    params=None,
    grid_size=DEFAULT_GRID,
    trials=50,
    seed=DEFAULT_SEED,
    order=DEFAULT_ORDER,
):
    """Check the theorem's inequality on ``[0, radius]`` for sampled and extremal inputs."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    theorem_in = Theorem.parse(theorem)
    theorem, params = _normalize(theorem_in, params)
    radius = theorem_radius(theorem, params)
    grid = np.linspace(0.0, radius, grid_size)
    cases = list(theorem_cases(theorem, params, trials, seed, order))
    ext = extremal_case(theorem, params, order)
    if ext is not None:
        cases.insert(0, ext)

    best = np.full(grid_size, np.inf)
    rows = [None] * grid_size
    for case in cases:
        lhs, tail, rhs = case.evaluate(grid)
        margin = rhs - lhs
        cert = (margin - tail) / np.maximum(1.0, np.abs(rhs))
        for i in np.nonzero(cert < best)[0]:
            best[i] = cert[i]
            rows[i] = GridPoint(float(grid[i]), float(lhs[i]), float(rhs[i]), float(margin[i]), float(tail[i]), case.label)

    report = VerificationReport(
        theorem_id=theorem_in.value,
        params={k: v for k, v in asdict(params).items()},
        radius=radius,
        grid=rows,
        seed=seed,
        trials=trials,
        order=order,
        min_certified_margin=float(np.min([p.margin - p.tail for p in rows])),
    )
    for p in rows:
        if p.margin - p.tail < -_allowance(p.rhs):
            report.verdict = "Fail"
            report.witness = p.r
            report.witness_case = p.case
            break
    if ext is not None:
        report.sharpness = sharpness_probe(ext, radius)
    return report


@dataclass(frozen=True)
class WorstCase:
    margin: float
    tail: float
    r: float
    case: str
    trials: int
    seed: int

    @property
    def certified(self):
        return self.margin - self.tail


def adversarial_search(theorem, params=None, trials=100, seed=DEFAULT_SEED, order=DEFAULT_ORDER, r=None):
    """Smallest margin over ``trials`` sampled class members at ``r`` (default: the radius)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    theorem, params = _normalize(theorem, params)
    r = theorem_radius(theorem, params) if r is None else r
    worst = None
    for case in theorem_cases(theorem, params, trials, seed, order):
        lhs, tail, rhs = case.evaluate(r)
        m, t = float(rhs[0] - lhs[0]), float(tail[0])
        if worst is None or m - t < worst.certified:
            worst = WorstCase(m, t, float(r), case.label, trials, seed)
    return worst
