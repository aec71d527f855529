import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohrlab import bounds, zoo
from bohrlab.errors import DomainError, DominationHypothesisViolated
from bohrlab.series import TaylorSeries

ORDER = 64
R0 = 1 - math.sqrt(2 / 3)
seeds = st.integers(0, 2**32 - 1)


def test_coeff_bound_laws():
    assert bounds.coeff_bound("univalent", 2.0, 5) == 10.0
    assert bounds.coeff_bound(zoo.Shape.CONVEX, 2.0, 5) == 2.0
    with pytest.raises(ValueError):
        bounds.coeff_bound("convex", 1.0, 0)


@pytest.mark.parametrize("make", [zoo.koebe_like, zoo.halfplane_like])
def test_dist_sandwich_on_canonical_targets(make):
    assert bounds.dist_sandwich_check(make(1 + 1j, 2.5j, 16))


def test_dist_sandwich_rejects_inconsistent_model():
    phi = zoo.koebe_like(0, 1, 16).phi
    assert not bounds.dist_sandwich_check(zoo.DomainModel(phi, 2.0, zoo.Shape.UNIVALENT))


def test_sample_radius_shrinks_with_low_order():
    assert bounds.sample_radius(4096) == bounds.SAMPLE_RADIUS
    assert bounds.sample_radius(64) < 0.65
    pts = bounds.sample_points(64)
    assert np.max(np.abs(pts)) <= bounds.sample_radius(64) + 1e-15


@settings(max_examples=50, deadline=None)
@given(seeds, st.floats(0, 1 / 3))
def test_quasi_subordinate_majorant_is_dominated(seed, r):
    rng = np.random.default_rng(seed)
    g = zoo.koebe_like(complex(rng.normal()), 1.0, ORDER).phi
    f = zoo.quasi_subordinate(g, zoo.random_self_map(rng, ORDER), zoo.random_schwarz(rng, True, ORDER))
    m = bounds.majorant_dominates(f, g, r)
    assert m.certified >= -1e-12 * (1 + g.majorant_at(r))


def test_majorant_comparison_fails_beyond_one_third():
    # a Blaschke factor is majorized by g = 1, yet its majorant exceeds 1 past 1/3
    a = 0.6
    g = TaylorSeries.constant(1.0, ORDER)
    f = zoo.blaschke_factor(a, ORDER)
    assert bounds.majorant_dominates(f, g, 0.3).margin >= 0
    assert bounds.majorant_dominates(f, g, 0.5).margin < 0


@settings(max_examples=40, deadline=None)
@given(seeds, st.floats(0.01, 1), st.floats(0, 1 / 3))
def test_derivative_domination_margin(seed, k, r):
    rng = np.random.default_rng(seed)
    h = zoo.koebe_like(0, 1, ORDER).subordinate(zoo.random_schwarz(rng, True, ORDER))
    f = zoo.harmonic_from_dilatation(h, zoo.random_self_map(rng, ORDER), k)
    m = bounds.derivative_domination_margin(f.h, f.g, k, r)
    assert m.certified >= -1e-12 * (1 + h.majorant_at(r))


def test_derivative_domination_checks_hypothesis():
    h = TaylorSeries([0, 1], ORDER)
    g = TaylorSeries([0, 2], ORDER)
    with pytest.raises(DominationHypothesisViolated):
        bounds.derivative_domination_margin(h, g, 0.5, 0.2)
    assert bounds.derivative_domination_margin(h, g, 0.5, 0.2, check=False).margin < 0


def test_bad_radius_rejected():
    with pytest.raises(DomainError):
        bounds.majorant_dominates(TaylorSeries([1]), TaylorSeries([1]), 1.0)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_schwarz_derivative_majorant_at_most_one(seed):
    w = zoo.random_schwarz(np.random.default_rng(seed), True, ORDER)
    assert bounds.schwarz_derivative_majorant(w, R0).upper <= 1 + 1e-12


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_zw_prime_plus_w_at_most_one(seed):
    w = zoo.random_self_map(np.random.default_rng(seed), ORDER)
    assert bounds.zw_prime_plus_w_majorant(w, R0).upper <= 1 + 1e-12


def test_schwarz_derivative_radius_is_sharp():
    w = zoo.blaschke_schwarz([zoo.LAMBDA_PROBE], order=256)
    assert bounds.schwarz_derivative_majorant(w, R0 * 0.999).value < 1
    assert bounds.schwarz_derivative_majorant(w, R0 * 1.001).value > 1


@settings(max_examples=40, deadline=None)
@given(seeds, st.floats(0, R0))
def test_derivative_bohr_margin(seed, r):
    rng = np.random.default_rng(seed)
    g = zoo.halfplane_like(complex(rng.normal()), 2.0, ORDER).phi
    f = zoo.quasi_subordinate_pair(g, zoo.random_self_map(rng, ORDER), zoo.random_schwarz(rng, True, ORDER))
    m = bounds.derivative_bohr_margin(f, g, r)
    assert m.certified >= -1e-12 * (1 + g.differentiate().majorant_at(r))
