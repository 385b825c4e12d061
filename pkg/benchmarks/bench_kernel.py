"""Compare the compiled kernel against the pure Python fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernel.py
    python3 benchmarks/bench_kernel.py --repeat 9
"""

import argparse
import math
import random
import statistics
import timeit

from zred import _kernel_py

try:
    from zred import _kernel
except ImportError:
    _kernel = None


def _workload():
    rng = random.Random(12)
    pairs = []
    for _ in range(400):
        den = rng.randint(1, 10 ** 9)
        pairs.append((den + rng.randint(1, 10 ** 12), den))
    deltas = [d for d in range(5, 1200)
              if d % 4 in (0, 1) and math.isqrt(d) ** 2 != d]
    states = []
    while len(states) < 120:
        d = rng.choice(deltas)
        s = math.isqrt(d)
        p, q = rng.randint(-s, s), rng.randint(1, 2 * s)
        if (d - p * p) % q == 0 and p + s >= 0:
            states.append((p, q, d))
    return pairs, deltas, states


def _tasks(mod, pairs, deltas, states):
    return [
        ("euclid_quotients", lambda: [mod.euclid_quotients(n, d)
                                      for n, d in pairs]),
        ("z_reduced_forms", lambda: [mod.z_reduced_forms(d)
                                     for d in deltas]),
        ("g_reduced_forms", lambda: [mod.g_reduced_forms(d)
                                     for d in deltas]),
        ("denjoy_bits", lambda: [mod.denjoy_bits(p, q, d, 300)
                                 for p, q, d in states]),
    ]


def _time(fn, repeat):
    return min(statistics.fmean(timeit.repeat(fn, number=1, repeat=3))
               for _ in range(max(1, repeat // 3)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=6,
                    help="timing repetitions per task (default 6)")
    args = ap.parse_args()

    pairs, deltas, states = _workload()
    pure = dict(_tasks(_kernel_py, pairs, deltas, states))
    print(f"{'task':18s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}")
    for name, fn in pure.items():
        tp = _time(fn, args.repeat)
        if _kernel is None:
            print(f"{name:18s} {tp:10.4f} {'n/a':>13s} {'n/a':>8s}")
            continue
        tc = _time(dict(_tasks(_kernel, pairs, deltas, states))[name],
                   args.repeat)
        print(f"{name:18s} {tp:10.4f} {tc:13.4f} {tp / tc:7.1f}x")
    if _kernel is None:
        print("compiled extension not built; showing pure timings only")


if __name__ == "__main__":
    main()
