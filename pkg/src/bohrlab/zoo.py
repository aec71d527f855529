"""Function families: canonical targets, Schwarz-class samples, harmonic maps.

Schwarz-class membership is by construction. Every self-map produced here is
(a unimodular or contracting multiple of) a finite Blaschke product, so
``|w| <= 1`` on the disk holds exactly before truncation.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import UnknownStyle, ZeroOutsideDisk
from .series import DEFAULT_ORDER, CoeffBound, TaylorSeries

# Cauchy-estimate circle used for coefficient envelopes of composed functions.
ENVELOPE_RADIUS = 0.9
# Sharpness probes take |lambda| this close to 1.
LAMBDA_PROBE = 1 - 1e-6


class Shape(enum.Enum):
    UNIVALENT = "univalent"
    CONVEX = "convex"


@dataclass(frozen=True)
class DomainModel:
    """Target map ``phi`` with the exact distance from ``phi(0)`` to the image boundary."""

    phi: TaylorSeries
    dist_to_boundary: float
    shape: Shape

    def __post_init__(self):
        if not self.dist_to_boundary > 0:
            raise ValueError("dist_to_boundary must be positive")

    @property
    def center(self):
        return complex(self.phi.coeffs[0])

    @property
    def phi_prime_0(self):
        return abs(self.phi.coeffs[1])

    @property
    def centered(self):
        """``phi - phi(0)`` with its coefficient envelope."""
        return _centered(self.phi)

    def coefficient_law(self):
        """Coefficient law for functions subordinate to ``phi``."""
        deg = 1 if self.shape is Shape.UNIVALENT else 0
        return CoeffBound(self.phi_prime_0, deg)

    def subordinate(self, omega):
        """``phi(omega(z))`` for omega in B0."""
        return self.phi.compose(omega).with_bound(self.coefficient_law())


def _centered(s):
    c = np.array(s.coeffs)
    c[0] = 0
    return TaylorSeries(c, s.order, s.bound)


def koebe_like(a0=0.0, scale=1.0, order=DEFAULT_ORDER):
    """``a0 + scale * z/(1-z)**2``: coefficients ``n*scale``, boundary distance ``|scale|/4``."""
    n = np.arange(order + 1, dtype=float)
    c = complex(scale) * n.astype(complex)
    c[0] = a0
    phi = TaylorSeries(c, order, CoeffBound(abs(scale), 1))
    return DomainModel(phi, abs(scale) / 4, Shape.UNIVALENT)


def halfplane_like(a0=0.0, scale=1.0, order=DEFAULT_ORDER):
    """``a0 + scale * z/(1-z)``: coefficients ``scale``, boundary distance ``|scale|/2``."""
    c = np.full(order + 1, complex(scale))
    c[0] = a0
    phi = TaylorSeries(c, order, CoeffBound(abs(scale), 0))
    return DomainModel(phi, abs(scale) / 2, Shape.CONVEX)


def blaschke_factor(a, order=DEFAULT_ORDER):
    """Series of ``(z - a)/(1 - conj(a) z)``."""
    a = complex(a)
    if abs(a) >= 1:
        raise ZeroOutsideDisk(f"Blaschke zero {a!r} is not inside the unit disk")
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = -a
    if order >= 1:
        c[1:] = (1 - abs(a) ** 2) * np.conj(a) ** np.arange(order)
    return TaylorSeries(c, order)


def blaschke_schwarz(zeros=(), rotation=1.0, vanish_at_origin=True, order=DEFAULT_ORDER):
    """``rotation * z**e * prod (z - z_i)/(1 - conj(z_i) z)`` with ``e = vanish_at_origin``.

    The result is a self-map of the disk; with ``vanish_at_origin`` it lies in B0.
    """
    if abs(abs(rotation) - 1) > 1e-12:
        raise ValueError("rotation must be unimodular")
    for zk in zeros:
        if abs(zk) >= 1:
            raise ZeroOutsideDisk(f"Blaschke zero {zk!r} is not inside the unit disk")
    out = TaylorSeries.constant(rotation, order)
    for zk in zeros:
        out = out * blaschke_factor(zk, order)
    if vanish_at_origin:
        out = out.mul_z().truncate(order)
    return out.with_bound(CoeffBound(1.0, 0))


def random_zeros(rng, max_degree=5, zero_radius=0.8):
    """Up to ``max_degree`` zeros drawn uniformly (by area) from ``|z| <= zero_radius``."""
    d = rng.integers(0, max_degree + 1)
    rad = zero_radius * np.sqrt(rng.random(d))
    return list(rad * np.exp(2j * np.pi * rng.random(d)))


def random_schwarz(rng, vanish_at_origin=True, order=DEFAULT_ORDER, max_degree=5, zero_radius=0.8):
    """Random finite Blaschke product (in B0 when ``vanish_at_origin``)."""
    rot = np.exp(2j * np.pi * rng.random())
    return blaschke_schwarz(random_zeros(rng, max_degree, zero_radius), rot, vanish_at_origin, order)


def random_self_map(rng, order=DEFAULT_ORDER, max_degree=5, zero_radius=0.8):
    """Random member of B: a contracting multiple of a Blaschke product, sometimes a constant."""
    c = np.sqrt(rng.random())
    if rng.random() < 0.15:
        return TaylorSeries.constant(c * np.exp(2j * np.pi * rng.random()), order)
    if rng.random() < 0.5:
        c = 1.0
    return random_schwarz(rng, False, order, max_degree, zero_radius).scale(c)


def envelope_radius(s):
    """Circle for Cauchy estimates, strictly inside the circle of s's own envelope."""
    return ENVELOPE_RADIUS * (s.bound.radius if s.bound is not None else 1.0)


def sup_modulus_bound(s, rho=None):
    """Upper bound for ``max_{|z|<=rho} |s(z)|`` from the majorant and its tail."""
    rho = envelope_radius(s) if rho is None else rho
    return s.majorant_with_tail(rho).upper


def cauchy_envelope(s):
    """Envelope valid for every function bounded on each circle by ``max |s|``."""
    rho = envelope_radius(s)
    return CoeffBound(sup_modulus_bound(s, rho), 0, rho)


def quasi_subordinate(g, factor, omega):
    """``factor(z) * g(omega(z))``, i.e. a function quasi-subordinate to g."""
    f = factor * g.compose(omega)
    return f.with_bound(cauchy_envelope(g))


def quasi_subordinate_pair(g, factor, omega, f0=0.0):
    """``f0 + factor*(g(omega) - g(0))``, so that ``f - f(0)`` is quasi-subordinate to ``g - g(0)``."""
    g0 = _centered(g)
    c = np.array((factor * g0.compose(omega)).coeffs)
    c[0] += f0
    return TaylorSeries(c, len(c) - 1, cauchy_envelope(g0))


@dataclass(frozen=True)
class HarmonicMap:
    """``f = h + conj(g)`` with dilatation bound ``k = (K-1)/(K+1)``; g(0) = 0."""

    h: TaylorSeries
    g: TaylorSeries
    k: float
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.g.coeffs[0] != 0:
            raise ValueError("harmonic maps are normalized with g(0) = 0")
        if not 0 <= self.k <= 1:
            raise ValueError("dilatation bound k must lie in [0, 1]")

    @property
    def K(self):
        return np.inf if self.k == 1 else (1 + self.k) / (1 - self.k)

    @property
    def order(self):
        return min(self.h.order, self.g.order)

    def max_dilatation(self, rho=0.5, samples=720):
        """Sampled ``max |g'/h'|`` on ``|z| = rho``."""
        hp = self.h.differentiate().on_circle(rho, samples)
        gp = self.g.differentiate().on_circle(rho, samples)
        return float(np.max(np.abs(gp) / np.abs(hp)))


def k_from_K(K):
    return 1.0 if np.isinf(K) else (K - 1) / (K + 1)


def harmonic_from_dilatation(h, d, k, label=""):
    """Harmonic map with ``g' = k * d * h'`` and ``g(0) = 0`` for a self-map d in B.

    The envelope for g comes from ``|g'| <= k |h'|`` and a Cauchy estimate
    for ``h'`` on a circle inside the circle of h's own envelope.
    """
    hp = h.differentiate()
    gp = (d * hp).scale(k)
    g = gp.integrate().truncate(h.order)
    if k == 0:
        return HarmonicMap(h, g.with_bound(CoeffBound(0.0)), k, label)
    rho = envelope_radius(h)
    m = sup_modulus_bound(hp, rho)
    return HarmonicMap(h, g.with_bound(CoeffBound(k * rho * m, 0, rho)), k, label)


class ExtremalStyle(enum.Enum):
    TH1_2_1 = "th1_2_1"
    TH1_2_2 = "th1_2_2"
    TH1_3_1 = "th1_3_1"
    TH1_3_2 = "th1_3_2"


def _style(style):
    if isinstance(style, ExtremalStyle):
        return style
    try:
        return ExtremalStyle(str(style).lower())
    except ValueError:
        raise UnknownStyle(f"unknown extremal style {style!r}") from None


def extremal_target(style, a0=0.0, order=DEFAULT_ORDER):
    """Target domain model paired with each extremal harmonic family."""
    style = _style(style)
    if style is ExtremalStyle.TH1_2_1:
        return koebe_like(a0, order=order)
    if style is ExtremalStyle.TH1_2_2:
        return halfplane_like(a0, order=order)
    if style is ExtremalStyle.TH1_3_1:
        return halfplane_like(1.0, order=order)
    return koebe_like(0.0, order=order)


def extremal_harmonic(style, k, lambda_param=LAMBDA_PROBE, order=DEFAULT_ORDER, a0=0.0):
    """Harmonic maps that show the corresponding radius cannot be enlarged.

    * ``th1_2_1``: h = a0 + z/(1-z)**2, g' = k*lambda*h'
    * ``th1_2_2``: h = a0 + z/(1-z),    g' = k*lambda*h'
    * ``th1_3_1``: h = 1/(1-z),          g' = k*z*h'
    * ``th1_3_2``: h = z/(1-z)**2,       g' = k*z*h'
    """
    style = _style(style)
    if not 0 <= k <= 1:
        raise ValueError("k must lie in [0, 1]")
    if abs(lambda_param) > 1:
        raise ValueError("|lambda_param| must not exceed 1")
    h = extremal_target(style, a0, order).phi
    if style in (ExtremalStyle.TH1_2_1, ExtremalStyle.TH1_2_2):
        mu = k * complex(lambda_param)
        g = _centered(h).scale(mu)
    else:
        hp = h.differentiate()
        g = hp.mul_z().scale(k).integrate().truncate(order)
        # b_m = k(m-1)/m <= k for 1/(1-z); b_m = k(m-1)**2/m <= k*m for the Koebe map
        deg = 0 if style is ExtremalStyle.TH1_3_1 else 1
        g = g.with_bound(CoeffBound(k, deg))
    return HarmonicMap(h, g, k, label=f"extremal:{style.value}")
