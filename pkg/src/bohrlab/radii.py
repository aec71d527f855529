"""Bohr radii: closed forms and bracketed roots of the radius equations.

Roots are found by bisection down to a bracket of width ``1e-13`` followed by
three Newton steps with hand-derived derivatives. A Newton step is kept only
if it stays in the certified bracket and does not increase the residual.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import BracketFailure, DomainError, NoConvergence

BISECTION_WIDTH = 1e-13
NEWTON_STEPS = 3
MAX_ITER = 200
RESIDUAL_TOL = 1e-12
# a bracket endpoint whose value is this small counts as the root itself
ENDPOINT_TOL = 1e-14

_PI2_6 = math.pi**2 / 6 - 1


class EquationName(enum.Enum):
    LIU16 = "liu16"
    LIU17 = "liu17"
    RSTAR = "rstar"
    RUSTAR = "rustar"
    PHI_LAMBDA = "phi_lambda"
    THA1 = "tha1"
    THA3 = "tha3"
    THA4 = "tha4"
    EQR = "eqr"
    EQR1 = "eqr1"


# -- the equations, written as F(r) = 0 -------------------------------------------


def _liu16(r, k):
    return 2 * (1 + k) * r / (1 - r) + 2 * k * math.log(1 - r) - 1


def _liu16_d(r, k):
    return (2 + 2 * k * r) / (1 - r) ** 2


def _liu17(r, k):
    return r * (1 - k + 2 * k * r) / (1 - r) ** 2 - k * math.log(1 - r) - 0.25


def _liu17_d(r, k):
    u = r * (1 - k + 2 * k * r)
    du = 1 - k + 4 * k * r
    return du / (1 - r) ** 2 + 2 * u / (1 - r) ** 3 + k / (1 - r)


def _eqr(rho, k):
    return 2 * (1 + k) * rho / (1 - rho) + 2 * k * math.log(1 - rho) - 1


def _eqr_d(rho, k):
    return 2 * (1 + k) / (1 - rho) ** 2 - 2 * k / (1 - rho)


def _eqr1(rho, k):
    return rho * (1 - k + 2 * k * rho) / (1 - rho) ** 2 - k * math.log(1 - rho) - 0.25


def _eqr1_d(rho, k):
    num = rho * (1 - k + 2 * k * rho)
    return (1 - k + 4 * k * rho) / (1 - rho) ** 2 + 2 * num / (1 - rho) ** 3 + k / (1 - rho)


def _rstar(r, k):
    return 5 * r**3 - 9 * r**2 - 5 * r + 1


def _rstar_d(r, k):
    return 15 * r**2 - 18 * r - 5


def _rustar(r, k):
    return (1 - 10 * r + r**2) * (1 - r) ** 2 * (1 + r) ** 3 - 32 * r**2 * (1 + r**2)


def _rustar_d(r, k):
    a = 1 - 10 * r + r**2
    b = (1 - r) ** 2
    c = (1 + r) ** 3
    da = -10 + 2 * r
    db = -2 * (1 - r)
    dc = 3 * (1 + r) ** 2
    return da * b * c + a * db * c + a * b * dc - 64 * r - 128 * r**3


def phi_lambda(lam, r):
    """Quadratic-in-lambda polynomial whose root in r is the refined radius r_0(lambda)."""
    return (
        8 * r**3 * lam**2
        - (13 * r**3 + 7 * r**2 - 5 * r + 1) * lam
        + 10 * r**3
        - 2 * r**2
        - 10 * r
        + 2
    )


def phi_lambda_dr(lam, r):
    return 24 * r**2 * lam**2 - (39 * r**2 + 14 * r - 5) * lam + 30 * r**2 - 4 * r - 10


def psi_lambda(lam, r):
    """Univalent-case analogue; psi(1, r) is the r_u* polynomial."""
    return (1 - 10 * r + r**2) * (2 - lam) * (1 - r) ** 2 * (1 + r) ** 3 - 32 * lam * r**2 * (
        1 + r**2
    ) * (1 + (1 - lam) * r)


def _tha1(r, k):
    return (1 - r) ** 2 - 4 * r * (1 + k * math.sqrt(1 + r))


def _tha1_d(r, k):
    s = math.sqrt(1 + r)
    return -2 * (1 - r) - 4 - 4 * k * (s + r / (2 * s))


def _tha3(r, k):
    s = math.sqrt((1 + r**2) / (1 - r**2) * _PI2_6)
    return r / (1 - r) + k * r**2 / (1 - r**2) * s - 0.5


def _tha3_d(r, k):
    s = math.sqrt((1 + r**2) / (1 - r**2) * _PI2_6)
    ds = s * 2 * r / (1 - r**4)
    q = r**2 / (1 - r**2)
    dq = 2 * r / (1 - r**2) ** 2
    return 1 / (1 - r) ** 2 + k * (dq * s + q * ds)


def _tha4(r, k):
    p = r**6 + 11 * r**4 + 11 * r**2 + 1
    s = math.sqrt(p / (1 - r**2) * _PI2_6)
    return r / (1 - r) ** 2 + k * r**2 / (1 - r**2) ** 2 * s - 0.25


def _tha4_d(r, k):
    p = r**6 + 11 * r**4 + 11 * r**2 + 1
    dp = 6 * r**5 + 44 * r**3 + 22 * r
    s = math.sqrt(p / (1 - r**2) * _PI2_6)
    ds = 0.5 * s * (dp / p + 2 * r / (1 - r**2))
    q = r**2 / (1 - r**2) ** 2
    dq = 2 * r * (1 + r**2) / (1 - r**2) ** 3
    return (1 + r) / (1 - r) ** 3 + k * (dq * s + q * ds)


_TABLE = {
    EquationName.LIU16: (_liu16, _liu16_d, (0.0, 1 / 3)),
    EquationName.LIU17: (_liu17, _liu17_d, (0.0, 1 / 3)),
    EquationName.EQR: (_eqr, _eqr_d, (0.0, 1 / 3)),
    EquationName.EQR1: (_eqr1, _eqr1_d, (0.0, 1 / 3)),
    EquationName.RSTAR: (_rstar, _rstar_d, (0.0, 1.0)),
    EquationName.RUSTAR: (_rustar, _rustar_d, (0.0, 1.0)),
    EquationName.THA1: (_tha1, _tha1_d, (0.0, 1.0)),
    EquationName.THA3: (_tha3, _tha3_d, (0.0, 0.5)),
    EquationName.THA4: (_tha4, _tha4_d, (0.0, 0.5)),
}

_USES_K = {
    EquationName.LIU16,
    EquationName.LIU17,
    EquationName.EQR,
    EquationName.EQR1,
    EquationName.THA1,
    EquationName.THA3,
    EquationName.THA4,
}


@dataclass(frozen=True)
class RadiusEquation:
    """A named radius equation with its parameters and search bracket."""

    name: EquationName
    k: float = 0.0
    lambda_dist: float | None = None
    bracket: tuple[float, float] | None = None

    def __post_init__(self):
        name = self.name if isinstance(self.name, EquationName) else EquationName(str(self.name).lower())
        object.__setattr__(self, "name", name)
        if name in _USES_K and not 0 <= self.k <= 1:
            raise DomainError(f"k must lie in [0, 1], got {self.k}")
        if name is EquationName.PHI_LAMBDA:
            if self.lambda_dist is None or not 0 < self.lambda_dist <= 1:
                raise DomainError("phi_lambda needs lambda_dist in (0, 1]")
        if self.bracket is None:
            object.__setattr__(self, "bracket", self.default_bracket())

    def default_bracket(self):
        if self.name is EquationName.PHI_LAMBDA:
            return (solve(RadiusEquation(EquationName.RSTAR)).value, 0.2)
        return _TABLE[self.name][2]

    def value(self, r):
        if self.name is EquationName.PHI_LAMBDA:
            return phi_lambda(self.lambda_dist, r)
        return _TABLE[self.name][0](r, self.k)

    def derivative(self, r):
        if self.name is EquationName.PHI_LAMBDA:
            return phi_lambda_dr(self.lambda_dist, r)
        return _TABLE[self.name][1](r, self.k)


@dataclass(frozen=True)
class RadiusResult:
    value: float
    residual: float
    iterations: int
    certified_bracket_width: float


def find_root(f, lo, hi, df=None, width=BISECTION_WIDTH, max_iter=MAX_ITER, newton_steps=NEWTON_STEPS):
    """Bisection on a sign-changing bracket, then optional Newton polish."""
    flo, fhi = f(lo), f(hi)
    if abs(flo) <= ENDPOINT_TOL:
        return RadiusResult(lo, abs(flo), 0, 0.0)
    if abs(fhi) <= ENDPOINT_TOL:
        return RadiusResult(hi, abs(fhi), 0, 0.0)
    if (flo > 0) == (fhi > 0):
        raise BracketFailure(f"f({lo})={flo:.3g} and f({hi})={fhi:.3g} share a sign")
    it = 0
    while hi - lo > width:
        if it >= max_iter:
            raise NoConvergence(f"bisection did not reach width {width} in {max_iter} steps")
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        it += 1
        if fm == 0:
            lo = hi = mid
            break
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    fx = f(x)
    if df is not None:
        for _ in range(newton_steps):
            d = df(x)
            if d == 0 or fx == 0:
                break
            xn = x - fx / d
            if not lo <= xn <= hi:
                break
            fn = f(xn)
            it += 1
            if abs(fn) > abs(fx):
                break
            x, fx = xn, fn
    return RadiusResult(x, abs(fx), it, hi - lo)


def solve(eq):
    """Root of a :class:`RadiusEquation` in its bracket."""
    lo, hi = eq.bracket
    res = find_root(eq.value, lo, hi, eq.derivative)
    if res.residual > RESIDUAL_TOL:
        raise NoConvergence(f"{eq.name.value}: residual {res.residual:.3g} above {RESIDUAL_TOL}")
    return res


def radius(name, k=0.0, lambda_dist=None):
    """Shorthand for ``solve(RadiusEquation(name, k, lambda_dist)).value``."""
    return solve(RadiusEquation(name, k, lambda_dist)).value


def r_u_closed_form(k):
    """Sharp univalent-target radius ``1/(2k+3+sqrt((2k+3)**2-1))``."""
    if not 0 <= k <= 1:
        raise DomainError(f"k must lie in [0, 1], got {k}")
    a = 2 * k + 3
    return 1 / (a + math.sqrt(a * a - 1))


def convex_radius(K):
    """Sharp convex-target radius ``(K+1)/(5K+1)``; ``K = inf`` gives 1/5."""
    if not K >= 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if math.isinf(K):
        return 0.2
    return (K + 1) / (5 * K + 1)


def solve_r0_of_lambda(lambda_dist):
    """Refined convex radius r_0(lambda) in (r_*, 1/5)."""
    if not 0 < lambda_dist < 1:
        raise DomainError(f"lambda_dist must lie in (0, 1), got {lambda_dist}")
    eq = RadiusEquation(EquationName.PHI_LAMBDA, lambda_dist=lambda_dist)
    res = solve(eq)
    lo, hi = eq.bracket
    # uniqueness is checked per call: strictly decreasing on a sample of the bracket
    grid = [lo + (hi - lo) * i / 64 for i in range(65)]
    if any(phi_lambda_dr(lambda_dist, r) >= 0 for r in grid):
        raise BracketFailure("phi_lambda is not monotone on (r_*, 1/5); root may not be unique")
    return res.value


def derivative_bohr_radius():
    """``1 - sqrt(2/3)``, the radius for majorants of derivatives."""
    return 1 - math.sqrt(2 / 3)
