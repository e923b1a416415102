"""Time the compiled kernels against the NumPy fallback.

Run with ``python3 benchmarks/bench_kernels.py``. For each input size prints
one line per kernel with the best-of-N time for each backend and the
speed-up. The compiled loops call scalar libm, so they win clearly on small
inputs but can trail NumPy's vectorized ``expm1`` on very large arrays.
"""

import argparse
import timeit

import numpy as np

from gmorder.kernels import available_backends


def cases(size):
    rng = np.random.default_rng(0)
    alphas = rng.uniform(0.05, 20, 5)
    betas = rng.uniform(0.05, 2, 5)
    lams = rng.uniform(0.05, 20, 5)
    x = np.linspace(0, 3, size)
    targets = np.geomspace(1e-6, 30, size)
    return {
        "splitmix64_uniforms": lambda k: k.splitmix64_uniforms(12345, size),
        "population_log_survival": lambda k: k.population_log_survival(alphas, betas, lams, x),
        "gm_cumhaz_inverse": lambda k: k.gm_cumhaz_inverse(0.5, 0.3, 0.2, targets),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 2000, 100_000])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the fallback is available")
    for size in args.sizes:
        print(f"\nsize {size}")
        print(f"{'kernel':<26}" + "".join(f"{b:>12}" for b in backends) + "     speed-up")
        for name, fn in cases(size).items():
            times = {b: min(timeit.repeat(lambda m=m: fn(m), number=1, repeat=args.repeat))
                     for b, m in backends.items()}
            line = f"{name:<26}" + "".join(f"{t * 1e6:>10.1f}us" for t in times.values())
            if "cython" in times:
                line += f"  {times['python'] / times['cython']:>8.1f}x"
            print(line)


if __name__ == "__main__":
    main()
