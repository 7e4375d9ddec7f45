"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the two integer kernels directly on random small-entry matrices, then a
realistic workload (the adjoint-action fixed subspaces of every acceptance
case) once per backend in a fresh interpreter.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from lorentz_homog import _kernels_py

try:
    from lorentz_homog import _kernels
except ImportError:
    _kernels = None

WORKLOAD = (
    "import time; from lorentz_homog.matrixlie import ACCEPTANCE_CASES, build_case; "
    "t = time.perf_counter(); [build_case(c).fixed_dims() for c in ACCEPTANCE_CASES]; "
    "print(time.perf_counter() - t)"
)


def _matrix(rng, n, m, bound=5):
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def _time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def _workload(pure: bool) -> float:
    env = dict(os.environ)
    env.pop("LORENTZ_HOMOG_PURE", None)
    if pure:
        env["LORENTZ_HOMOG_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    rng = random.Random(0)
    if _kernels is None:
        print("compiled kernels not built; only the pure-Python path is available")
    print(f"{'kernel':<22}{'size':>8}{'pure (ms)':>12}{'compiled (ms)':>15}{'speedup':>9}")
    for n in (12, 24, 48):
        a, b = _matrix(rng, n, n), _matrix(rng, n, n)
        cases = [
            ("gauss_jordan", lambda m, a=a, n=n: m.gauss_jordan([r[:] for r in a], n)),
            ("matmul", lambda m, a=a, b=b: m.matmul(a, b)),
        ]
        for name, call in cases:
            if name == "gauss_jordan" and _kernels is not None:
                try:
                    _kernels.gauss_jordan([r[:] for r in a], n)
                except OverflowError:
                    print(f"{name:<22}{n:>8}  compiled path overflows int64; dispatch falls back")
                    continue
            py = _time(lambda: call(_kernels_py), args.repeat) * 1e3
            if _kernels is None:
                print(f"{name:<22}{n:>8}{py:>12.3f}{'-':>15}{'-':>9}")
                continue
            cy = _time(lambda: call(_kernels), args.repeat) * 1e3
            print(f"{name:<22}{n:>8}{py:>12.3f}{cy:>15.3f}{py / cy:>8.1f}x")
    pure = _workload(True)
    line = f"{'acceptance fixed dims':<22}{'':>8}{pure * 1e3:>12.1f}"
    if _kernels is not None:
        comp = _workload(False)
        line += f"{comp * 1e3:>15.1f}{pure / comp:>8.1f}x"
    print(line)


if __name__ == "__main__":
    main()
