"""Compare the compiled and numpy kernels on random series.

    python benchmarks/bench_kernels.py [--orders 32 64 128 256] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from bohrlab import _pykernels

try:
    from bohrlab import _ckernels
except ImportError:
    _ckernels = None


def _series(rng, n, zero_constant=False):
    c = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    if zero_constant:
        c[0] = 0
    return c / np.arange(1, n + 2)


def bench(fn, args, repeat):
    number = max(1, int(0.05 / max(timeit.timeit(lambda: fn(*args), number=1), 1e-7)))
    best = min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat))
    return best / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--orders", type=int, nargs="+", default=[32, 64, 128, 256])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the numpy backend is timed")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'N':>6}{'numpy [us]':>14}{'cython [us]':>14}{'speedup':>10}")
    for n in args.orders:
        a, b, w = _series(rng, n), _series(rng, n), _series(rng, n, zero_constant=True)
        z = 0.5 * np.exp(2j * np.pi * rng.random(720))
        cases = {
            "cauchy_product": (a, b, n),
            "horner_compose": (a, w, n),
            "evaluate[720]": (a, z),
            "majorant[128]": (np.abs(a), np.linspace(0, 0.5, 128), 1),
        }
        for name, call_args in cases.items():
            kernel = name.split("[")[0]
            py = bench(getattr(_pykernels, kernel), call_args, args.repeat)
            if _ckernels is None or not hasattr(_ckernels, kernel):
                print(f"{name:<16}{n:>6}{py * 1e6:>14.1f}{'-':>14}{'-':>10}")
                continue
            cy = bench(getattr(_ckernels, kernel), call_args, args.repeat)
            print(f"{name:<16}{n:>6}{py * 1e6:>14.1f}{cy * 1e6:>14.1f}{py / cy:>10.2f}")


if __name__ == "__main__":
    main()
