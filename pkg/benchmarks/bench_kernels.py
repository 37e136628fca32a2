"""Compare the compiled and pure-Python modular kernels on probe-sized work.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times the three hot kernels on instances shaped like real dimension probes
(an eta-style coefficient block Khatri-Rao'd with an exponent matrix, plus
a monomial evaluation sweep) and prints per-kernel speedups.  The compiled
backend is skipped gracefully when the extension is not built.
"""

import argparse
import random
import time

from toricdim import DEFAULT_PRIME, _kernels_py

try:
    from toricdim import _fastkernels
except ImportError:
    _fastkernels = None


def make_instance(n_top, n_vars, n_cols, seed):
    rng = random.Random(seed)
    top = [
        [rng.randrange(DEFAULT_PRIME) for _ in range(n_cols)] for _ in range(n_top)
    ]
    exponents = [
        [rng.randint(0, 6) for _ in range(n_cols)] for _ in range(n_vars)
    ]
    point = [rng.randrange(1, DEFAULT_PRIME) for _ in range(n_vars)]
    return top, exponents, point


CASES = (
    # (label, eta rows, matrix rows, columns): probe-sized and larger
    ("quartic threefold, R=14", 14, 5, 70),
    ("synthetic wide", 24, 8, 160),
    ("synthetic tall", 60, 10, 320),
)


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None or dt < best else best
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5,
                        help="take the best of this many runs (default 5)")
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _fastkernels is not None:
        backends.append(("c", _fastkernels))
    else:
        print("compiled extension not built; timing the pure backend only\n")

    header = f"{'case':<24} {'kernel':<18}" + "".join(
        f"{name + ' (ms)':>14}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, n_top, n_vars, n_cols, in CASES:
        top, exponents, point = make_instance(n_top, n_vars, n_cols, seed=1)
        kernels = (
            ("eval_columns_mod", lambda impl: impl.eval_columns_mod(
                exponents, point, DEFAULT_PRIME)),
            ("khatri_rao_mod", lambda impl: impl.khatri_rao_mod(
                top, exponents, DEFAULT_PRIME)),
            ("kr_rank_mod", lambda impl: impl.kr_rank_mod(
                top, exponents, DEFAULT_PRIME)),
        )
        for kname, call in kernels:
            times = []
            results = []
            for _, impl in backends:
                dt, result = best_of(lambda: call(impl), args.repeat)
                times.append(dt)
                results.append(result)
            if len(results) == 2 and results[0] != results[1]:
                raise SystemExit(f"backend mismatch on {label}/{kname}")
            row = f"{label:<24} {kname:<18}" + "".join(
                f"{1e3 * dt:>14.3f}" for dt in times
            )
            if len(times) == 2:
                row += f"{times[0] / times[1]:>9.1f}x"
            print(row)
        print()


if __name__ == "__main__":
    main()
