"""Backend selection for the series kernels.

The compiled extension supplies composition, evaluation and majorants when
it imports; setting ``BOHRLAB_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

import numpy as np

from . import _pykernels

if os.environ.get("BOHRLAB_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"


def _c(x):
    return np.ascontiguousarray(x, dtype=np.complex128)


def _f(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def cauchy_product(a, b, n):
    # numpy's convolution is the fastest product in both backends
    return _pykernels.cauchy_product(_c(a), _c(b), int(n))


def horner_compose(outer, inner, n):
    return _impl.horner_compose(_c(outer), _c(inner), int(n))


def evaluate(coeffs, z):
    z = np.asarray(z)
    out = _impl.evaluate(_c(coeffs), _c(z.ravel()))
    return out.reshape(z.shape)


def majorant(moduli, r, start=0):
    r = np.asarray(r, dtype=np.float64)
    out = _impl.majorant(_f(moduli), _f(r.ravel()), int(start))
    return out.reshape(r.shape)
