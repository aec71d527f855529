import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bohrlab import _pykernels, kernels
from bohrlab.errors import DomainError, NonzeroConstantTerm
from bohrlab.series import Bounded, CoeffBound, TaylorSeries, geometric

ORDER = 24


def complex_coeffs(n, scale=1.0):
    part = st.floats(-scale, scale, allow_nan=False, allow_infinity=False)
    return st.lists(st.builds(complex, part, part), min_size=n, max_size=n)


series = complex_coeffs(ORDER + 1).map(lambda c: TaylorSeries(c, ORDER))
inner_series = complex_coeffs(ORDER + 1, 0.5).map(lambda c: TaylorSeries([0] + c[1:], ORDER))
small_z = st.builds(
    lambda r, t: r * np.exp(1j * t), st.floats(0, 0.2), st.floats(0, 2 * np.pi)
)


# -- construction -------------------------------------------------------------------


def test_pads_and_truncates_to_order():
    s = TaylorSeries([1, 2], order=4)
    assert s.order == 4
    assert list(s.coeffs) == [1, 2, 0, 0, 0]
    assert TaylorSeries(range(10), order=3).order == 3


def test_coefficients_are_read_only():
    s = TaylorSeries([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_constructors():
    assert TaylorSeries.identity(3)[1] == 1
    assert TaylorSeries.monomial(2, 3.0, order=4)[2] == 3.0
    assert TaylorSeries.monomial(7, order=4).allclose(TaylorSeries.zero(4))
    assert TaylorSeries.constant(2j, 2)[0] == 2j


def test_truncate_refuses_to_extend():
    with pytest.raises(ValueError):
        TaylorSeries([1, 2]).truncate(5)


# -- arithmetic ---------------------------------------------------------------------------


def test_binary_ops_truncate_to_smaller_order():
    a = TaylorSeries(np.ones(9))
    b = TaylorSeries(np.ones(5))
    assert (a + b).order == 4
    assert (a * b).order == 4


def test_geometric_squared_has_coefficients_n_plus_one():
    g = geometric(10)
    assert np.allclose((g * g).coeffs, np.arange(1, 12))


def test_scalar_operations():
    s = TaylorSeries([1, 2, 3])
    assert (2 * s).allclose(TaylorSeries([2, 4, 6]))
    assert (1 - s).allclose(TaylorSeries([0, -2, -3]))
    assert (s + 1).allclose(TaylorSeries([2, 2, 3]))
    assert (-s).allclose(TaylorSeries([-1, -2, -3]))


def test_scale_carries_bound():
    s = geometric(8).scale(-3)
    assert s.bound.scale == 3


def test_compose_with_identity_is_identity():
    f = geometric(12)
    assert f.compose(TaylorSeries.identity(12)).allclose(f)


def test_compose_known_closed_form():
    # 1/(1 - z/(1-z)) = (1-z)/(1-2z) = 1 + sum 2**(n-1) z**n
    f = geometric(10)
    inner = geometric(10) - 1
    expected = np.concatenate([[1.0], 2.0 ** np.arange(10)])
    assert np.allclose(f.compose(inner).coeffs, expected)


def test_compose_rejects_nonzero_constant():
    with pytest.raises(NonzeroConstantTerm):
        geometric(4).compose(geometric(4))


def test_differentiate_integrate_round_trip():
    s = TaylorSeries([0, 1, 2, 3, 4])
    assert s.differentiate().integrate().allclose(s)
    assert s.differentiate().order == 3
    assert TaylorSeries([5]).differentiate().allclose(TaylorSeries([0]))


def test_mul_z_and_div_z():
    s = TaylorSeries([1, 2, 3])
    assert s.mul_z().allclose(TaylorSeries([0, 1, 2, 3]))
    assert s.mul_z().div_z().allclose(s)
    with pytest.raises(NonzeroConstantTerm):
        s.div_z()


# -- evaluation ------------------------------------------------------------------------------


def test_evaluate_geometric():
    g = geometric(200)
    z = np.array([0.3, 0.2j, -0.1 + 0.1j])
    assert np.allclose(g(z), 1 / (1 - z))
    assert g(0.5) == pytest.approx(2, rel=1e-12)


def test_majorant_skip_constant():
    s = TaylorSeries([5, -1, 1j])
    assert s.majorant_at(0.5) == pytest.approx(5 + 0.5 + 0.25)
    assert s.majorant_at(0.5, skip_constant=True) == pytest.approx(0.75)
    assert np.allclose(s.majorant_at(np.array([0.0, 0.5])), [5, 5.75])


@pytest.mark.parametrize("r", [-0.1, 1.0, 1.5, float("nan")])
def test_majorant_rejects_bad_radius(r):
    with pytest.raises(DomainError):
        geometric(4).majorant_at(r)


def test_majorant_with_tail_covers_true_value():
    g = geometric(30)
    b = g.majorant_with_tail(0.5)
    assert isinstance(b, Bounded)
    assert b.value < 2 <= b.upper
    assert b.upper - 2 < 1e-8


def test_exact_polynomial_has_zero_tail():
    assert TaylorSeries([1, 1]).majorant_with_tail(0.9).tail == 0


def test_squared_norm_of_geometric():
    r = 0.4
    b = geometric(40).squared_norm_with_tail(r)
    exact = r**2 / (1 - r**2)
    assert b.value <= exact <= b.upper
    assert b.upper - exact < 1e-14


# -- coefficient envelopes --------------------------------------------------------------------


@pytest.mark.parametrize("degree", [0, 1, 2])
@pytest.mark.parametrize("radius", [1.0, 0.9])
def test_tail_bound_dominates_brute_sum(degree, radius):
    b = CoeffBound(2.0, degree, radius)
    n = np.arange(21, 4000)
    for r in (0.1, 0.5, 0.8):
        brute = float(np.sum(b.cap(n) * r**n))
        assert b.tail(r, 20) >= brute
        if r <= 0.5:
            assert b.tail(r, 20) <= 2 * brute


def test_tail_is_infinite_past_the_envelope_radius():
    assert math.isinf(CoeffBound(1.0, 0, 0.5).tail(0.6, 10))
    assert CoeffBound(1.0).tail(0.0, 10) == 0


def test_derivative_envelope_is_valid_for_koebe_coefficients():
    # coefficients n of z/(1-z)**2; derivative coefficients (m+1)**2
    d = CoeffBound(1.0, 1).derivative()
    m = np.arange(1, 200)
    assert np.all((m + 1) ** 2 <= d.cap(m))


# -- algebraic invariants ------------------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(series, series)
def test_mul_commutes(a, b):
    assert (a * b).allclose(b * a, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(series, series, small_z)
def test_mul_is_evaluation_homomorphism(a, b, z):
    assert abs((a * b)(z) - a(z) * b(z)) < 1e-9


@settings(max_examples=40, deadline=None)
@given(series, inner_series, small_z)
def test_compose_is_evaluation_homomorphism(f, w, z):
    assert abs(f.compose(w)(z) - f(w(z))) < 1e-8


@settings(max_examples=30, deadline=None)
@given(series, inner_series, inner_series)
def test_compose_is_associative(f, g, h):
    left = f.compose(g.compose(h))
    right = f.compose(g).compose(h)
    scale = 1 + float(np.max(np.abs(right.coeffs)))
    assert left.allclose(right, atol=1e-10 * scale)


@settings(max_examples=40, deadline=None)
@given(series, st.floats(0, 0.95))
def test_majorant_dominates_modulus(f, r):
    z = f.on_circle(r, 64)
    assert np.max(np.abs(z)) <= f.majorant_at(r) * (1 + 1e-12) + 1e-12


# -- backends ----------------------------------------------------------------------------------


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernels not built")
@pytest.mark.parametrize("n", [0, 1, 7, 64])
def test_backends_agree(n):
    from bohrlab import _ckernels

    rng = np.random.default_rng(n)
    a = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    b = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    b[0] = 0
    z = np.array([0.1 + 0.2j, -0.3j])
    assert np.allclose(_ckernels.horner_compose(a, b, n), _pykernels.horner_compose(a, b, n))
    assert np.allclose(_ckernels.evaluate(a, z), _pykernels.evaluate(a, z))
    m = np.abs(a)
    r = np.array([0.0, 0.3, 0.9])
    assert np.allclose(_ckernels.majorant(m, r, 1), _pykernels.majorant(m, r, 1))


def test_backend_selection_honours_environment(monkeypatch):
    import importlib

    monkeypatch.setenv("BOHRLAB_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("BOHRLAB_PURE_PYTHON")
        importlib.reload(kernels)
