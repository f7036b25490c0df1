"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --size 60 --repeat 5
"""

import argparse
import timeit

import numpy as np

from psgraded import _fallback

try:
    from psgraded import _speedups
except ImportError:
    _speedups = None


def cases(size, p, rng):
    a = rng.integers(0, p, size=(size, size))
    b = rng.integers(0, p, size=(size, size))
    z = rng.integers(-(10**9), 10**9, size=size * size)
    return {
        "matmul_mod": lambda m: m.matmul_mod(a, b, p),
        "rref_mod": lambda m: m.rref_mod(np.concatenate([a, b], axis=1), p),
        "gen_binom_mod_array": lambda m: m.gen_binom_mod_array(z, 7, p),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=60)
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if _speedups is None:
        print("compiled extension not built; only the fallback is timed")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<22}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, fn in cases(args.size, args.p, rng).items():
        slow = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat)) * 1e3
        if _speedups is None:
            print(f"{name:<22}{slow:>14.2f}{'-':>14}{'-':>10}")
            continue
        fast = min(timeit.repeat(lambda: fn(_speedups), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<22}{slow:>14.2f}{fast:>14.2f}{slow / fast:>9.1f}x")


if __name__ == "__main__":
    main()
