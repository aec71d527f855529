"""Truncated complex Taylor series.

A :class:`TaylorSeries` of order ``N`` stores the coefficients of
``z**0 .. z**N`` of an analytic function; everything beyond ``N`` is
unknown. Binary operations truncate to the smaller order, so precision is
never silently extended.

Tail information travels separately as a :class:`CoeffBound` attached to a
series (``series.bound``). A series without a bound is treated as an exact
polynomial: its tail is zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DomainError, NonzeroConstantTerm

DEFAULT_ORDER = 256
TAIL_PAD = 1e-12


class Bounded(NamedTuple):
    """A truncated sum together with a bound on the omitted tail."""

    value: float
    tail: float

    @property
    def upper(self):
        return self.value + self.tail


@dataclass(frozen=True)
class CoeffBound:
    """Coefficient envelope ``|c_n| <= scale * n**degree * radius**(-n)`` for n >= 1.

    ``radius=1`` gives the polynomial growth laws of the univalent
    (``degree=1``) and convex (``degree=0``) subordinate coefficient laws; ``radius<1``
    is a Cauchy estimate. Tails are bounded in closed form by a geometric
    majorant of the term ratio.
    """

    scale: float
    degree: int = 0
    radius: float = 1.0

    def cap(self, n):
        n = np.asarray(n, dtype=float)
        return self.scale * n**self.degree * self.radius ** (-n)

    def tail(self, r, order):
        """Bound on ``sum_{n > order} cap(n) * r**n`` (vectorized over r)."""
        r = np.asarray(r, dtype=float)
        if self.scale == 0:
            return np.zeros_like(r) if r.ndim else 0.0
        m = order + 1
        q = r / self.radius
        ratio = ((m + 1) / m) ** self.degree * q
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            first = self.scale * float(m) ** self.degree * q**m
            # the relative pad keeps exact geometric tails on the safe side of roundoff
            out = np.where(ratio < 1, first / (1 - ratio) * (1 + TAIL_PAD), np.inf)
        out = np.where(r == 0, 0.0, out)
        return out if out.ndim else float(out)

    def squared(self):
        """Envelope for ``|c_n|**2`` as coefficients in the variable ``r**2``."""
        return CoeffBound(self.scale**2, 2 * self.degree, self.radius**2)

    def scaled(self, factor):
        return CoeffBound(self.scale * abs(factor), self.degree, self.radius)

    def derivative(self):
        # coefficient m of s' is (m+1) c_{m+1}; (m+1) <= 2m for m >= 1
        return CoeffBound(
            self.scale * 2 ** (self.degree + 1) / self.radius, self.degree + 1, self.radius
        )

    def shifted_up(self):
        """Envelope for the coefficients of ``z * s``."""
        return CoeffBound(self.scale * self.radius, self.degree, self.radius)


def _check_radius(r):
    arr = np.asarray(r, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < 0) or np.any(arr >= 1):
        raise DomainError(f"majorant radius must lie in [0, 1), got {r!r}")
    return arr


class TaylorSeries:
    """Coefficients ``c_0 .. c_N`` of a power series truncated at ``z**N``."""

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs, order=None, bound=None):
        c = np.array(coeffs, dtype=np.complex128).ravel()
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(c) < order + 1:
            c = np.concatenate([c, np.zeros(order + 1 - len(c), dtype=np.complex128)])
        c = c[: order + 1].copy()
        c.flags.writeable = False
        self.coeffs = c
        self.bound = bound

    # -- constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls(np.zeros(order + 1), order)

    @classmethod
    def constant(cls, value, order=DEFAULT_ORDER):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c, order)

    @classmethod
    def identity(cls, order=DEFAULT_ORDER):
        return cls.monomial(1, order=order)

    @classmethod
    def monomial(cls, power, coeff=1.0, order=DEFAULT_ORDER):
        c = np.zeros(order + 1, dtype=np.complex128)
        if power <= order:
            c[power] = coeff
        return cls(c, order)

    # -- basic protocol ---------------------------------------------------------
    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"TaylorSeries([{head}{more}], order={self.order})"

    def with_bound(self, bound):
        return TaylorSeries(self.coeffs, self.order, bound)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TaylorSeries(self.coeffs[: order + 1], order)

    def allclose(self, other, atol=1e-12, rtol=0.0):
        n = min(self.order, other.order)
        return bool(np.allclose(self.coeffs[: n + 1], other.coeffs[: n + 1], atol=atol, rtol=rtol))

    def _coerce(self, other):
        if isinstance(other, TaylorSeries):
            return other
        return TaylorSeries.constant(other, self.order)

    # -- arithmetic ---------------------------------------------------------------
    def add(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TaylorSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1], n)

    def sub(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TaylorSeries(self.coeffs[: n + 1] - other.coeffs[: n + 1], n)

    def scale(self, factor):
        bound = self.bound.scaled(factor) if self.bound is not None else None
        return TaylorSeries(self.coeffs * complex(factor), self.order, bound)

    def mul(self, other):
        """Cauchy product truncated to the smaller order."""
        if not isinstance(other, TaylorSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        return TaylorSeries(kernels.cauchy_product(self.coeffs, other.coeffs, n), n)

    __add__ = add
    __sub__ = sub
    __mul__ = mul

    def __radd__(self, other):
        return self.add(other)

    def __rsub__(self, other):
        return self._coerce(other).sub(self)

    def __rmul__(self, other):
        return self.mul(other)

    def __neg__(self):
        return self.scale(-1)

    def compose(self, inner):
        """``self(inner(z))`` by Horner's scheme; ``inner(0)`` must be exactly zero."""
        if inner.coeffs[0] != 0:
            raise NonzeroConstantTerm(
                f"inner series has constant term {inner.coeffs[0]!r}; shift it explicitly"
            )
        n = min(self.order, inner.order)
        return TaylorSeries(kernels.horner_compose(self.coeffs, inner.coeffs, n), n)

    def differentiate(self):
        n = self.order
        if n == 0:
            return TaylorSeries([0.0], 0)
        c = self.coeffs[1:] * np.arange(1, n + 1)
        bound = self.bound.derivative() if self.bound is not None else None
        return TaylorSeries(c, n - 1, bound)

    def integrate(self):
        """Antiderivative with zero constant term; the order grows by one."""
        n = self.order
        c = np.zeros(n + 2, dtype=np.complex128)
        c[1:] = self.coeffs / np.arange(1, n + 2)
        return TaylorSeries(c, n + 1)

    def mul_z(self):
        """``z * self``, known exactly through order + 1."""
        c = np.concatenate([[0.0], self.coeffs])
        bound = self.bound.shifted_up() if self.bound is not None else None
        return TaylorSeries(c, self.order + 1, bound)

    def div_z(self):
        """``self / z``; requires a zero constant term."""
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm("division by z needs a vanishing constant term")
        bound = None
        if self.bound is not None:
            b = self.bound
            bound = CoeffBound(b.scale * 2**b.degree / b.radius, b.degree, b.radius)
        return TaylorSeries(self.coeffs[1:], self.order - 1, bound)

    # -- evaluation -------------------------------------------------------------
    def __call__(self, z):
        return kernels.evaluate(self.coeffs, z)

    def on_circle(self, rho, samples=720):
        """Values on ``samples`` equispaced points of ``|z| = rho``."""
        theta = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
        return self(rho * np.exp(1j * theta))

    def majorant_at(self, r, skip_constant=False):
        """Truncated majorant ``sum |c_n| r**n`` (n >= 1 when ``skip_constant``)."""
        arr = _check_radius(r)
        out = kernels.majorant(np.abs(self.coeffs), np.atleast_1d(arr), 1 if skip_constant else 0)
        return out.reshape(arr.shape) if arr.ndim else float(out[0])

    def majorant_with_tail(self, r, skip_constant=False, bound=None):
        """Majorant partial sum with a bound on the omitted tail.

        ``bound`` overrides the series' own envelope. Without either the tail
        is reported as zero.
        """
        value = self.majorant_at(r, skip_constant)
        bound = bound if bound is not None else self.bound
        tail = bound.tail(r, self.order) if bound is not None else 0.0 * np.asarray(value)
        if np.ndim(value) == 0:
            return Bounded(float(value), float(tail))
        return Bounded(value, np.asarray(tail, dtype=float))

    def squared_norm_with_tail(self, r, skip_constant=True):
        """``sum |c_n|**2 r**(2n)`` with tail, the quantity ``||f_0||_r`` for one part."""
        arr = _check_radius(r)
        start = 1 if skip_constant else 0
        sq = np.abs(self.coeffs) ** 2
        value = kernels.majorant(sq, np.atleast_1d(arr**2), start).reshape(arr.shape)
        if self.bound is not None:
            tail = np.asarray(self.bound.squared().tail(arr**2, self.order), dtype=float)
        else:
            tail = np.zeros_like(value)
        if arr.ndim == 0:
            return Bounded(float(value), float(tail))
        return Bounded(value, tail)


def geometric(order=DEFAULT_ORDER):
    """``1/(1-z)``."""
    return TaylorSeries(np.ones(order + 1), order, CoeffBound(1.0, 0))
