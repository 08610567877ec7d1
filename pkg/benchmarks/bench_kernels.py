"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from gmflow_pose import _kernels_py

try:
    from gmflow_pose import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def cases(rng: np.random.Generator):
    n = 20000
    u, v = rng.uniform(-4, 132, n), rng.uniform(-4, 132, n)
    z = rng.uniform(2, 6, n)
    valid = rng.uniform(size=n) > 0.05
    pts = rng.normal(size=(3000, 3))
    q, r = rng.normal(size=(1000, 3)), rng.normal(size=(1000, 3))
    return {
        "zbuffer_splat (20k points, 128x128)": ("zbuffer_splat", (u, v, z, valid, 128, 128)),
        "max_pairwise_distance (3k points)": ("max_pairwise_distance", (pts,)),
        "nearest_distances (1k x 1k)": ("nearest_distances", (q, r)),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _compiled is None:
        print("compiled extension not importable; rebuild with `pip install -e .`")
        return 1
    print(f"{'kernel':40s} {'compiled ms':>12s} {'numpy ms':>10s} {'speedup':>8s}")
    for label, (name, a) in cases(np.random.default_rng(0)).items():
        times = []
        for mod in (_compiled, _kernels_py):
            fn = getattr(mod, name)
            times.append(min(timeit.repeat(lambda: fn(*a), number=1, repeat=args.repeat)) * 1e3)
        print(f"{label:40s} {times[0]:12.2f} {times[1]:10.2f} {times[1] / times[0]:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
