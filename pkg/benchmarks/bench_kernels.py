"""Time the pure-Python and compiled search kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from hookcontent import _backend
from hookcontent.ballots import (
    count_multivote,
    enumerate_colstrict,
    enumerate_ssyt,
    enumerate_syt,
)

WORKLOADS = [
    ("multivote N=8 n=(4,4,3,2)", lambda b: count_multivote(8, (4, 4, 3, 2), backend=b)),
    ("multivote N=10 n=(5,4,3)", lambda b: count_multivote(10, (5, 4, 3), backend=b)),
    ("ssyt N=6 (4,3,2,1)", lambda b: enumerate_ssyt(6, (4, 3, 2, 1), backend=b)),
    ("syt (4,3,2,1)", lambda b: enumerate_syt((4, 3, 2, 1), backend=b)),
    ("colstrict N=5 (7)", lambda b: enumerate_colstrict(5, (7,), backend=b)),
]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    try:
        _backend.get_kernels("cython")
        backends = ["python", "cython"]
    except ImportError:
        backends = ["python"]
        print("compiled kernels not built; timing the fallback only")

    print(f"{'workload':32} {'count':>10} " + " ".join(f"{b + ' s':>10}" for b in backends)
          + ("   speedup" if len(backends) == 2 else ""))
    for name, fn in WORKLOADS:
        counts = []
        times = []
        for b in backends:
            value, elapsed = best_of(lambda: fn(b), args.repeat)
            counts.append(value)
            times.append(elapsed)
        if len(set(counts)) != 1:
            raise SystemExit(f"backends disagree on {name}: {counts}")
        line = f"{name:32} {counts[0]:>10} " + " ".join(f"{t:>10.4f}" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:>6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
