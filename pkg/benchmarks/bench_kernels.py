"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row swaps the kernel functions used by the library, so the end-to-end
rows (monotonicity, census) measure the whole pipeline on either backend.
"""

from __future__ import annotations

import argparse
import contextlib
import timeit
from array import array

from unsharp import _kernels_py, kernels
from unsharp.effect import check_monotonous
from unsharp.enumeration import SearchSpec, enumerate_structures
from unsharp.examples import ex1, ex2
from unsharp.tables import flat

NAMES = ("assoc_violation", "mono_violation", "touching_conflict", "canon_smaller")


@contextlib.contextmanager
def backend(module):
    saved = {name: getattr(kernels, name) for name in NAMES}
    for name in NAMES:
        setattr(kernels, name, getattr(module, name))
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def cases():
    E1, E2 = ex1(), ex2()
    t2 = flat(E2.plus)
    masks = [array("Q", [(i * 2654435761) & 0xFFFF for i in range(400)]) for _ in range(4)]
    return [
        ("assoc ex2 (32^3 triples)", lambda: kernels.assoc_violation(t2, 32)),
        ("mono scan 400x400", lambda: kernels.mono_violation(*masks)),
        ("monotonicity ex1 exhaustive", lambda: check_monotonous(E1)),
        ("census effect order 7", lambda: enumerate_structures(SearchSpec(7, "effect"))),
        ("census pea order 6", lambda: enumerate_structures(SearchSpec(6, "pea"))),
    ]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    try:
        from unsharp import _ckernels
    except ImportError:
        raise SystemExit("compiled kernels not built; run pip install -e .")
    print(f"{'case':32} {'python s':>10} {'cython s':>10} {'speed-up':>9}")
    for name, fn in cases():
        times = {}
        for label, mod in (("python", _kernels_py), ("cython", _ckernels)):
            with backend(mod):
                times[label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        print(f"{name:32} {times['python']:10.4f} {times['cython']:10.4f} "
              f"{times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
