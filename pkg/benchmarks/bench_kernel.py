"""Compare the compiled and pure-Python kernels on random frameworks.

    python benchmarks/bench_kernel.py --sizes 8 12 16 --count 5
"""
import argparse
import random
import statistics
import time

from abaplus import kernel
from abaplus.generate import random_framework


def time_backend(fw, backend, repeat):
    idx = fw.index
    k = kernel.make_kernel(idx.n, idx.entry_targets, idx.entry_masks, idx.entry_lower, backend=backend)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        k.classify(False)
        k.classify(True)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16])
    p.add_argument("--count", type=int, default=5, help="frameworks per size")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    backends = kernel.available_backends()
    rng = random.Random(args.seed)
    print(f"{'max|A|':>6} " + " ".join(f"{b + ' ms':>12}" for b in backends) + ("  speedup" if len(backends) > 1 else ""))
    for n in args.sizes:
        frameworks = [
            random_framework(rng, max_assumptions=n, max_rules=2 * n, intermediates=n // 3, pref_density=0.15)
            for _ in range(args.count)
        ]
        times = {b: statistics.median(time_backend(fw, b, args.repeat) for fw in frameworks) for b in backends}
        row = f"{n:>6} " + " ".join(f"{times[b] * 1e3:>12.3f}" for b in backends)
        if len(backends) > 1:
            row += f"  {times['python'] / max(times['cython'], 1e-9):7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
