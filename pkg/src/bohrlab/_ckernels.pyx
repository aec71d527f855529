"""Compiled inner loops for truncated complex power series.

Every routine mirrors one in :mod:`bohrlab._pykernels` exactly; the two are
interchangeable and tested against each other. The standalone Cauchy product
is not here: ``np.convolve`` beats a straightforward loop at every order used.
"""
import numpy as np


def horner_compose(const double complex[::1] outer, const double complex[::1] inner, Py_ssize_t n):
    """Coefficients 0..n of outer(inner(z)); inner[0] must be zero.

    The accumulator only keeps degrees that survive the remaining
    multiplications by inner (valuation >= 1), so step i touches n-i terms.
    """
    cdef Py_ssize_t no = outer.shape[0]
    cdef Py_ssize_t ni = min(inner.shape[0], n + 1)
    cdef double[::1] wr = np.ascontiguousarray(np.real(inner[:ni]), dtype=np.float64)
    cdef double[::1] wi = np.ascontiguousarray(np.imag(inner[:ni]), dtype=np.float64)
    cdef double[::1] accr = np.zeros(n + 1)
    cdef double[::1] acci = np.zeros(n + 1)
    cdef double[::1] nr = np.zeros(n + 1)
    cdef double[::1] ni_ = np.zeros(n + 1)
    cdef double[::1] tmp
    cdef Py_ssize_t i, j, t, lim, tmax
    cdef double xr, xi
    if n < no:
        accr[0] = outer[n].real
        acci[0] = outer[n].imag
    for i in range(n - 1, -1, -1):
        lim = n - i
        for j in range(lim + 1):
            nr[j] = 0.0
            ni_[j] = 0.0
        tmax = min(lim, ni - 1)
        for t in range(1, tmax + 1):
            xr = wr[t]
            xi = wi[t]
            for j in range(t, lim + 1):
                nr[j] += xr * accr[j - t] - xi * acci[j - t]
                ni_[j] += xr * acci[j - t] + xi * accr[j - t]
        tmp = accr
        accr = nr
        nr = tmp
        tmp = acci
        acci = ni_
        ni_ = tmp
        if i < no:
            accr[0] = outer[i].real
            acci[0] = outer[i].imag
    return np.asarray(accr) + 1j * np.asarray(acci)


def evaluate(const double complex[::1] coeffs, const double complex[::1] z):
    """Horner evaluation of the polynomial at every point of z.

    Points form the inner loop so that independent Horner chains interleave.
    """
    cdef Py_ssize_t m = z.shape[0]
    cdef Py_ssize_t n = coeffs.shape[0]
    cdef double[::1] zr = np.ascontiguousarray(np.asarray(z).real)
    cdef double[::1] zi = np.ascontiguousarray(np.asarray(z).imag)
    cdef double[::1] accr = np.zeros(m)
    cdef double[::1] acci = np.zeros(m)
    cdef Py_ssize_t p, i
    cdef double cr, ci, tr
    for i in range(n - 1, -1, -1):
        cr = coeffs[i].real
        ci = coeffs[i].imag
        for p in range(m):
            tr = accr[p] * zr[p] - acci[p] * zi[p] + cr
            acci[p] = accr[p] * zi[p] + acci[p] * zr[p] + ci
            accr[p] = tr
    return np.asarray(accr) + 1j * np.asarray(acci)


def majorant(const double[::1] moduli, const double[::1] r, Py_ssize_t start):
    """sum_{n >= start} moduli[n] * r**n for every entry of r."""
    cdef Py_ssize_t m = r.shape[0]
    cdef Py_ssize_t n = moduli.shape[0]
    out_arr = np.zeros(m, dtype=np.float64)
    cdef double[::1] acc = out_arr
    cdef Py_ssize_t p, i
    cdef double c
    for i in range(n - 1, start - 1, -1):
        c = moduli[i]
        for p in range(m):
            acc[p] = acc[p] * r[p] + c
    for i in range(start):
        for p in range(m):
            acc[p] = acc[p] * r[p]
    return out_arr
