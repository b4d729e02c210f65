"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_det.py [--repeat N]

Times the polynomial Bareiss determinant on Seifert pencils of random
integer matrices and the integer determinant.  Both backends must return
identical results.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from knotgenus import _pykernel

try:
    from knotgenus import _ckernel
except ImportError:
    _ckernel = None


def pencil_dense(v):
    n = len(v)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            p = [v[i][j], -v[j][i]]
            while p and p[-1] == 0:
                p.pop()
            row.append(p)
        out.append(row)
    return out


def workloads(seed: int):
    rng = random.Random(seed)
    mats = {n: [[[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)] for _ in range(20)]
            for n in (4, 8, 12, 16)}
    return mats


def run(kernel, mats):
    return [kernel.poly_det(pencil_dense(v)) for v in mats]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"seed={args.seed} repeat={args.repeat}")
    print(f"{'workload':<28}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for n, mats in workloads(args.seed).items():
        if run(_pykernel, mats) != run(_ckernel, mats):
            print(f"backends disagree at size {n}")
            return 1
        tp = min(timeit.repeat(lambda: run(_pykernel, mats), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: run(_ckernel, mats), number=1, repeat=args.repeat))
        print(f"{f'poly det, 20 x {n}x{n}':<28}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.2f}x")
    big = [[random.Random(n).randint(-9, 9) for _ in range(24)] for n in range(24)]
    tp = min(timeit.repeat(lambda: _pykernel.int_det([r[:] for r in big]), number=20, repeat=args.repeat))
    tc = min(timeit.repeat(lambda: _ckernel.int_det([r[:] for r in big]), number=20, repeat=args.repeat))
    print(f"{'int det, 20 x 24x24':<28}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
