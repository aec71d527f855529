"""numpy implementations of the series kernels (fallback for ``_ckernels``)."""
import numpy as np


def cauchy_product(a, b, n):
    """Coefficients 0..n of a*b."""
    out = np.zeros(n + 1, dtype=np.complex128)
    prod = np.convolve(a[: n + 1], b[: n + 1])[: n + 1]
    out[: prod.shape[0]] = prod
    return out


def horner_compose(outer, inner, n):
    """Coefficients 0..n of outer(inner(z)); inner[0] must be zero."""
    outer = np.concatenate([outer, np.zeros(max(0, n + 1 - len(outer)), complex)])
    inner = np.concatenate([inner, np.zeros(max(0, n + 1 - len(inner)), complex)])
    acc = np.zeros(n + 1, dtype=np.complex128)
    acc[0] = outer[n]
    for i in range(n - 1, -1, -1):
        lim = n - i
        acc[1 : lim + 1] = np.convolve(acc[:lim], inner[1 : lim + 1])[:lim]
        acc[0] = outer[i]
    return acc


def evaluate(coeffs, z):
    """Horner evaluation of the polynomial at every point of z."""
    return np.polyval(coeffs[::-1], z).astype(np.complex128)


def majorant(moduli, r, start):
    """sum_{n >= start} moduli[n] * r**n for every entry of r."""
    m = np.array(moduli, dtype=np.float64)
    m[:start] = 0.0
    return np.polyval(m[::-1], r).astype(np.float64)
