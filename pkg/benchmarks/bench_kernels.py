"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--size 4] [--sweep SUITES]

``--sweep`` also times a whole ``kuwork sweep`` run under each backend, in a
fresh interpreter so the backend choice at import is honoured.
"""

import argparse
import os
import subprocess
import sys
import timeit
from itertools import product

from kuwork import kernels
from kuwork.search import enumerate_ku_algebras


def workloads(size):
    entries = [e for n in range(1, size + 1) for e in enumerate_ku_algebras(n)]
    tables = [(list(e.algebra.flat), e.algebra.n) for e in entries]
    maps = [(list(e.algebra.flat), e.algebra.n, list(d.image)) for e in entries for d in e.derivations]

    def axioms(k):
        for flat, n in tables:
            k.ku_witnesses(flat, n)

    def derivations(k):
        for flat, n in tables:
            for d in product(range(n), repeat=n):
                k.derivation_witness(flat, n, d, False)

    def ideals(k):
        for flat, n, d in maps:
            for rank in product(range(3), repeat=n):
                for kind in (kernels.LEFT, kernels.RIGHT):
                    k.ideal_witness(flat, n, d, rank, kind)

    def search(k):
        k.search_tables(size)

    return {"axioms": axioms, "derivations": derivations, "ideals": ideals, f"search n={size}": search}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--size", type=int, default=4)
    parser.add_argument("--sweep", help="comma-separated suites to time end to end at --sweep-size")
    parser.add_argument("--sweep-size", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled kernels are not built; only the pure backend is timed")
    print(f"{'workload':<14}" + "".join(f"{name:>12}" for name in backends) + "     speedup")
    for label, work in workloads(args.size).items():
        best = {name: min(timeit.repeat(lambda: work(k), number=1, repeat=args.repeat))
                for name, k in backends.items()}
        speed = f"{best['pure'] / best['compiled']:>11.1f}x" if "compiled" in best else ""
        print(f"{label:<14}" + "".join(f"{best[n]:>11.4f}s" for n in backends) + speed)
    if args.sweep:
        cmd = [sys.executable, "-m", "kuwork", "sweep", "--suite", args.sweep,
               "--size", str(args.sweep_size), "--format", "records", "-o", os.devnull]
        for name in backends:
            env = dict(os.environ)
            if name == "pure":
                env["KUWORK_PURE_PYTHON"] = "1"
            else:
                env.pop("KUWORK_PURE_PYTHON", None)
            start = timeit.default_timer()
            subprocess.run(cmd, env=env, check=False)
            print(f"sweep {args.sweep} n<={args.sweep_size} [{name}]: {timeit.default_timer() - start:.2f}s")


if __name__ == "__main__":
    main()
