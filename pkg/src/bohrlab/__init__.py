"""Bohr radii and numerical verification of Bohr-type inequalities.

Truncated power series with certified tails, canonical target and
Schwarz-class families, radius solvers, and a theorem verifier.
"""
from .errors import (
    BohrError,
    BracketFailure,
    DomainError,
    DominationHypothesisViolated,
    HypothesisViolation,
    NoConvergence,
    NonzeroConstantTerm,
    UnknownStyle,
    ZeroOutsideDisk,
)
from .kernels import BACKEND
from .radii import (
    EquationName,
    RadiusEquation,
    RadiusResult,
    convex_radius,
    derivative_bohr_radius,
    r_u_closed_form,
    radius,
    solve,
    solve_r0_of_lambda,
)
from .series import Bounded, CoeffBound, TaylorSeries
from .verify import (
    BohrFunctional,
    FunctionalKind,
    Theorem,
    TheoremParams,
    VerificationReport,
    adversarial_search,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BohrError",
    "BohrFunctional",
    "Bounded",
    "BracketFailure",
    "CoeffBound",
    "DomainError",
    "DominationHypothesisViolated",
    "EquationName",
    "FunctionalKind",
    "HypothesisViolation",
    "NoConvergence",
    "NonzeroConstantTerm",
    "RadiusEquation",
    "RadiusResult",
    "TaylorSeries",
    "Theorem",
    "TheoremParams",
    "UnknownStyle",
    "VerificationReport",
    "ZeroOutsideDisk",
    "adversarial_search",
    "convex_radius",
    "derivative_bohr_radius",
    "r_u_closed_form",
    "radius",
    "solve",
    "solve_r0_of_lambda",
    "verify_theorem",
]
