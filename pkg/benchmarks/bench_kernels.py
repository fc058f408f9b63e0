"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one row per kernel with the best wall time of each backend.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from cutgroups import _pykernels
from cutgroups.catalog import catalog, cyclic
from cutgroups.groups import direct_product, normal_subgroups
from cutgroups.ring import AugmentationLattice, bass_unit

try:
    from cutgroups import _kernels as compiled
except ImportError:  # extension not built
    compiled = None


def cases():
    S5 = catalog("symmetric", 5)
    big = direct_product(catalog("symmetric", 4), cyclic(20))  # order 480
    for G in (S5, big):
        args = (G.perms, G._base, G._weights, G._sorted_keys, G._key_order)
        yield f"mult_table |G|={G.order}", "mult_table", args
        yield f"class_labels |G|={G.order}", "class_labels", (G.table, G.inv)
    C29 = cyclic(29)
    u = bass_unit(C29, C29.generator_indices[0], 3)
    # keep coefficients inside the int64 fast path
    small = {g: c % 1000 - 500 for g, c in u.coeffs.items()}
    idx = np.array(list(small), dtype=np.int64)
    coef = np.array(list(small.values()), dtype=np.int64)
    yield "convolve_int64 |G|=29", "convolve_int64", (C29.table, idx, coef, idx, coef)
    D = catalog("dihedral", 12)
    A = max(normal_subgroups(D), key=lambda N: N.order if N.order < D.order else 0)
    rows = np.array(AugmentationLattice(D, A).rows, dtype=np.int64)
    yield f"echelon {rows.shape[0]}x{rows.shape[1]}", "echelon", (rows,)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", compiled)] if compiled else [])
    print(f"{'kernel':<28}" + "".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for label, fn, fargs in cases():
        times = []
        for _, mod in backends:
            f = getattr(mod, fn)
            call = (lambda: f(*[a.copy() for a in fargs])) if fn == "echelon" else (lambda: f(*fargs))
            number = 1
            times.append(min(timeit.repeat(call, number=number, repeat=args.repeat)) / number)
        cells = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        speed = f"{times[0] / times[1]:>8.1f}x" if len(times) == 2 else "       -"
        print(f"{label:<28}{cells}{speed}")
    if compiled is None:
        print("compiled extension not available; only the fallback was timed")


if __name__ == "__main__":
    main()
