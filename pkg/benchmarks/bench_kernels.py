"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from qriccati import catalog, kernels
from qriccati.qcore import q_pochhammer_inf
from qriccati.qhyper import phi


def _poch_inf():
    for q in (0.3, 0.5, 0.7, 0.9):
        for a in (-0.8, 0.1, 0.45, 0.7):
            q_pochhammer_inf(a, q)


def _phi():
    for q in (0.3, 0.5, 0.7, 0.9):
        phi([0.0], [-q], q, -0.6)
        phi([0.3, -0.2], [0.6], q, 0.5)
        phi([q**-6, q**7, 0.4], [q, -q], q, q)


def _suite():
    catalog.verify_all(catalog.build_catalog(), diagnose_printed=False)


WORKLOADS = {
    "poch_inf": (_poch_inf, 200),
    "phi": (_phi, 200),
    "catalog": (_suite, 1),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--only", choices=sorted(WORKLOADS), action="append")
    args = ap.parse_args()

    backends = kernels.available_backends()
    names = args.only or list(WORKLOADS)
    print(f"backends: {', '.join(backends)}")
    print(f"{'workload':<10} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    original = kernels.BACKEND
    try:
        for name in names:
            fn, number = WORKLOADS[name]
            times = {}
            for b in backends:
                kernels.use_backend(b)
                fn()  # warm caches
                times[b] = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
            row = f"{name:<10} " + " ".join(f"{times[b] * 1e3:>10.3f}ms" for b in backends)
            if "compiled" in times:
                row += f"   {times['python'] / times['compiled']:.1f}x"
            print(row)
    finally:
        kernels.use_backend(original)


if __name__ == "__main__":
    main()
