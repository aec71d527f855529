"""Acceptance gate: each criterion runs at its stated tolerance and prints one line.

Run with ``pytest tests/test_acceptance.py -v``; the PASS/FAIL lines are
written past pytest's capture so they appear in the log.
"""
import math
import time

import mpmath
import numpy as np
import pytest

from bohrlab import bounds, radii, verify, zoo
from bohrlab.series import TaylorSeries
from bohrlab.verify import TheoremParams

R0 = 1 - math.sqrt(2 / 3)
# roundoff allowance for certified margins, relative to the compared magnitude
ROUND = 1e-12


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        assert ok, f"{name}: {detail}"

    return emit


# -- 1. root reproduction -------------------------------------------------------------------


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def test_1a_rstar(report):
    r, dt = _timed(lambda: radii.radius("rstar"))
    report("1a rstar", abs(r - 0.15867508) <= 1e-8 and dt < 1, f"{r:.17g} in {dt:.3g}s")


def test_1b_rustar(report):
    r, dt = _timed(lambda: radii.radius("rustar"))
    report("1b rustar", abs(r - 0.0808958838) <= 1e-9 and dt < 1, f"{r:.17g} in {dt:.3g}s")


def test_1c_k1_radii(report):
    (a, b), dt = _timed(lambda: (radii.radius("liu16", 1.0), radii.radius("liu17", 1.0)))
    ok = abs(a - 0.299823) <= 1e-6 and abs(b - 0.161353) <= 1e-6 and dt < 1
    report("1c liu16/liu17 at k=1", ok, f"{a:.17g}, {b:.17g} in {dt:.3g}s")


def test_1d_r_u_closed_form(report):
    def run():
        ks = np.linspace(0, 1, 101)
        res = max(abs(4 * (1 + k) * r - (1 - r) ** 2) for k, r in ((k, radii.r_u_closed_form(k)) for k in ks))
        return res, abs(radii.r_u_closed_form(0) - (3 - 2 * math.sqrt(2)))

    (res, at0), dt = _timed(run)
    report("1d r_u residual / r_u(0)", res <= 1e-12 and at0 <= 1e-12 and dt < 1, f"max residual {res:.3g}, |r_u(0)-(3-2sqrt2)| {at0:.3g}")


def test_1e_convex_and_derivative(report):
    r = radii.derivative_bohr_radius()
    quad = abs(3 * r * r - 6 * r + 1)
    ok = radii.convex_radius(1) == 1 / 3 and quad <= 1e-14
    report("1e convex(1) and derivative radius", ok, f"convex(1)={radii.convex_radius(1)!r}, quadratic residual {quad:.3g}")


# -- 2. equation identities -------------------------------------------------------------------


def test_2_equation_identities(report):
    worst = 0.0
    for k in (0, 0.25, 0.5, 0.75, 1):
        worst = max(
            worst,
            abs(radii.radius("liu16", k) - radii.radius("eqr", k)),
            abs(radii.radius("liu17", k) - radii.radius("eqr1", k)),
        )
    report("2 liu16=eqr, liu17=eqr1", worst <= 1e-11, f"max difference {worst:.3g}")


# -- 3. sharpness crossings ---------------------------------------------------------------------


@pytest.mark.parametrize("theorem", ["th1_2_1", "th1_2_2", "th1_3_1", "th1_3_2"])
def test_3_sharpness_crossings(report, theorem):
    t0 = time.perf_counter()
    errors = []
    passed = True
    for k in (0.3, 0.7, 1.0):
        rep = verify.verify_theorem(theorem, TheoremParams(k=k), grid_size=128, trials=20, order=256)
        s = rep.sharpness
        errors.append(abs(s.crossing_error) if s.crossing_error is not None else math.inf)
        passed &= rep.passed and s.violation > 0
    dt = time.perf_counter() - t0
    ok = passed and max(errors) <= 1e-4 and dt < 10
    report(f"3 sharpness {theorem}", ok, f"max |crossing - radius| {max(errors):.3g}, {dt:.2f}s")


# -- 4. property suites ---------------------------------------------------------------------------

PROP_ORDER = 64


def _random_target(rng, order):
    pick = rng.integers(3)
    center = complex(rng.normal(), rng.normal())
    scale = np.exp(rng.uniform(-1, 1)) * np.exp(2j * np.pi * rng.random())
    if pick == 0:
        return zoo.koebe_like(center, scale, order).phi
    if pick == 1:
        return zoo.halfplane_like(center, scale, order).phi
    deg = int(rng.integers(1, 9))
    return TaylorSeries(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1), order)


def test_4a_quasi_subordination_majorants(report):
    rng = np.random.default_rng(verify.DEFAULT_SEED)
    r = np.linspace(0, 1 / 3, 64)
    worst = math.inf
    for _ in range(1000):
        g = _random_target(rng, PROP_ORDER)
        f = zoo.quasi_subordinate(g, zoo.random_self_map(rng, PROP_ORDER), zoo.random_schwarz(rng, True, PROP_ORDER))
        mg = g.majorant_at(r)
        mf = f.majorant_with_tail(r)
        worst = min(worst, float(np.min((mg - mf.value - mf.tail) / np.maximum(1, mg))))
    report("4a quasi-subordinate majorant <= target majorant on [0,1/3]", worst >= -ROUND, f"min certified relative margin {worst:.3g}")


def test_4b_coefficient_caps(report):
    rng = np.random.default_rng(verify.DEFAULT_SEED + 1)
    n = np.arange(1, 65)
    worst = -math.inf
    for i in range(1000):
        make = zoo.koebe_like if i % 2 == 0 else zoo.halfplane_like
        model = make(complex(rng.normal()), np.exp(rng.uniform(-1, 1)) * np.exp(2j * np.pi * rng.random()), PROP_ORDER)
        f = model.subordinate(zoo.random_schwarz(rng, True, PROP_ORDER))
        caps = np.array([bounds.coeff_bound(model.shape, model.phi_prime_0, m) for m in n])
        worst = max(worst, float(np.max(np.abs(f.coeffs[1:65]) / caps)))
    report("4b coefficient caps n|phi'(0)| and |phi'(0)|, n<=64", worst <= 1 + ROUND, f"max |a_n|/cap {worst:.15g}")


def test_4c_schwarz_majorants_at_r0(report):
    rng = np.random.default_rng(verify.DEFAULT_SEED + 2)
    worst_f = worst_l = -math.inf
    for _ in range(500):
        w0 = zoo.random_schwarz(rng, True, 256)
        w = zoo.random_self_map(rng, 256)
        worst_f = max(worst_f, bounds.schwarz_derivative_majorant(w0, R0).value)
        b = bounds.zw_prime_plus_w_majorant(w, R0)
        worst_l = max(worst_l, b.value)
    ok = worst_f <= 1 + ROUND and worst_l <= 1 + ROUND
    report("4c M_w' <= 1 (B0) and M_zw' + M_w <= 1 (B) at 1-sqrt(2/3)", ok, f"max {worst_f:.15g}, {worst_l:.15g}")


@pytest.mark.parametrize("theorem", ["th4_1", "th4_2"])
def test_4d_refined_functional(report, theorem):
    worst = math.inf
    ok = True
    t0 = time.perf_counter()
    for lam in (0.3, 0.6, 0.9):
        rep = verify.verify_theorem(theorem, TheoremParams(lambda_dist=lam), grid_size=32, trials=500, order=128)
        ok &= rep.passed
        worst = min(worst, rep.min_certified_margin)
    report(f"4d T_f <= lambda ({theorem}, 500 trials x 3 lambdas)", ok, f"min certified margin {worst:.3g}, {time.perf_counter() - t0:.2f}s")


def test_4e_monotonicity(report):
    ks = np.linspace(0, 1, 21)
    ok = True
    for name in ("liu16", "liu17", "tha1"):
        vals = [radii.radius(name, k) for k in ks]
        ok &= all(a > b for a, b in zip(vals, vals[1:]))
    report("4e radius strictly decreasing in k (liu16, liu17, tha1)", ok, "21-point grid")


# -- 5. oracle equivalence -----------------------------------------------------------------------------


def _mp_compose(outer, inner, n):
    """Horner's scheme in 40-digit arithmetic, truncating every product at degree n."""
    with mpmath.workdps(40):
        a = [mpmath.mpc(complex(c)) for c in outer[: n + 1]]
        b = [mpmath.mpc(complex(c)) for c in inner[: n + 1]]
        acc = [mpmath.mpc(0)] * (n + 1)
        acc[0] = a[n]
        for i in range(n - 1, -1, -1):
            prod = [mpmath.fsum(acc[j] * b[m - j] for j in range(m + 1)) for m in range(n + 1)]
            prod[0] += a[i]
            acc = prod
        return np.array([complex(c) for c in acc])


def test_5_compose_oracle(report):
    rng = np.random.default_rng(verify.DEFAULT_SEED + 5)
    n = 32
    worst = 0.0
    for _ in range(100):
        outer = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
        inner = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
        inner[0] = 0
        got = TaylorSeries(outer).compose(TaylorSeries(inner)).coeffs
        want = _mp_compose(outer, inner, n)
        # cancellation-free scale: the same composition on coefficient moduli
        scale = TaylorSeries(np.abs(outer)).compose(TaylorSeries(np.abs(inner))).coeffs.real
        worst = max(worst, float(np.max(np.abs(got - want) / scale)))
    report("5 compose vs 40-digit Horner oracle, N=32", worst <= 1e-12, f"max relative error {worst:.3g}")
