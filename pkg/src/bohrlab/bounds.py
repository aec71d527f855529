"""Coefficient caps and majorant comparisons.

Margins are signed: a non-negative margin means the comparison holds at the
given radius. Each margin comes with the tail bound of the truncated side
that enters with a minus sign, so ``margin - tail`` is a certified lower bound
on the true margin.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DominationHypothesisViolated
from .series import Bounded, CoeffBound, TaylorSeries, _check_radius
from .zoo import DomainModel, Shape

DOMINATION_TOL = 1e-9
BOUNDARY_SAMPLES = 720
INTERIOR_SAMPLES = 256
SAMPLE_RADIUS = 0.99
# sampling circle is capped where the dropped terms are below this relative size
TRUNCATION_SLACK = 1e-14


class Margin(NamedTuple):
    margin: float
    tail: float

    @property
    def certified(self):
        return self.margin - self.tail


def coeff_bound(shape, phi_prime_0, n):
    """Cap on ``|a_n|`` for a function subordinate to a univalent or convex map."""
    if n < 1:
        raise ValueError("coefficient index must be >= 1")
    shape = Shape(shape) if not isinstance(shape, Shape) else shape
    return n * phi_prime_0 if shape is Shape.UNIVALENT else float(phi_prime_0)


def dist_sandwich_check(model: DomainModel, tol=1e-12):
    """``c |phi'(0)| <= dist <= |phi'(0)|`` with c = 1/4 (univalent) or 1/2 (convex)."""
    low = 0.25 if model.shape is Shape.UNIVALENT else 0.5
    p = model.phi_prime_0
    d = model.dist_to_boundary
    return bool(low * p - tol <= d <= p + tol)


def majorant_dominates(f: TaylorSeries, g: TaylorSeries, r, skip_constant=False):
    """``M_g(r) - M_f(r)``, the signed margin of the majorant comparison."""
    _check_radius(r)
    mf = f.majorant_with_tail(r, skip_constant)
    mg = g.majorant_at(r, skip_constant)
    return Margin(mg - mf.value, mf.tail)


def sample_radius(order, cap=SAMPLE_RADIUS):
    """Largest sampling radius <= cap at which truncation at ``order`` is negligible."""
    return min(cap, TRUNCATION_SLACK ** (1.0 / max(order, 1)))


def sample_points(order, rho=None, boundary=BOUNDARY_SAMPLES, interior=INTERIOR_SAMPLES, seed=0):
    """Boundary circle plus uniformly scattered interior points for hypothesis checks."""
    rho = sample_radius(order) if rho is None else rho
    theta = np.linspace(0.0, 2 * np.pi, boundary, endpoint=False)
    rng = np.random.default_rng(seed)
    rad = rho * np.sqrt(rng.random(interior))
    inner = rad * np.exp(2j * np.pi * rng.random(interior))
    return np.concatenate([rho * np.exp(1j * theta), inner])


def domination_excess(h, g, k, points=None):
    """``max (|g'| - k |h'|)`` over the sample points, scaled by ``1 + k|h'|``."""
    hp, gp = h.differentiate(), g.differentiate()
    z = sample_points(min(hp.order, gp.order)) if points is None else points
    a = np.abs(hp(z))
    b = np.abs(gp(z))
    return float(np.max((b - k * a) / (1 + k * a)))


def derivative_domination_margin(h: TaylorSeries, g: TaylorSeries, k, r, check=True):
    """``k * sum_{n>=1} |a_n| r**n - sum_{n>=1} |b_n| r**n`` under ``|g'| <= k|h'|``."""
    _check_radius(r)
    if check:
        excess = domination_excess(h, g, k)
        if excess > DOMINATION_TOL:
            raise DominationHypothesisViolated(
                f"sampled |g'| exceeds k|h'| by {excess:.3g} (relative)"
            )
    mh = h.majorant_at(r, skip_constant=True)
    mg = g.majorant_with_tail(r, skip_constant=True)
    return Margin(k * mh - mg.value, mg.tail)


def schwarz_derivative_majorant(w: TaylorSeries, r):
    """``M_{w'}(r)`` with tail, for w in B0."""
    return w.differentiate().majorant_with_tail(r)


def zw_prime_plus_w_majorant(w: TaylorSeries, r):
    """``M_{z w'}(r) + M_w(r)`` with tail, for w in B."""
    zwp = w.differentiate().mul_z()
    if w.bound is not None:
        b = w.bound
        # coefficient n of z w' is n * c_n
        zwp = zwp.with_bound(CoeffBound(b.scale, b.degree + 1, b.radius))
    a = zwp.majorant_with_tail(r)
    b = w.majorant_with_tail(r)
    return Bounded(a.value + b.value, a.tail + b.tail)


def derivative_bohr_margin(f: TaylorSeries, g: TaylorSeries, r):
    """``M_{g'}(r) - M_{f'}(r)``."""
    _check_radius(r)
    mf = f.differentiate().majorant_with_tail(r)
    mg = g.differentiate().majorant_at(r)
    return Margin(mg - mf.value, mf.tail)
