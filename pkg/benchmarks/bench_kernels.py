#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the kernel functions directly from both implementations, then an
end-to-end subgroup census in subprocesses (CHARKIT_PURE=1 forces the
fallback).  Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import time

from charkit import _kernels_py
from charkit.catalog import parse_group

try:
    from charkit import _kernels_c
except ImportError:
    _kernels_c = None


def timeit(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels():
    S7 = parse_group("name:S7")
    gens = list(S7.generators)
    elements = _kernels_py.closure(7, gens, cap=None)
    index = {p: i for i, p in enumerate(elements)}
    labels = _kernels_py.conjugacy_labels(elements, gens, index)
    invs = _kernels_py.inverse_indices(elements, index)
    r = max(labels) + 1
    reps = [labels.index(i) for i in range(r)]
    coeffs = list(range(1, r + 1))
    g = elements[len(elements) // 2]

    cases = [
        ("closure S7 (5040 elements)", "closure", (7, gens, None)),
        ("conjugacy classes S7", "conjugacy_labels", (elements, gens, index)),
        ("inverse indices S7", "inverse_indices", (elements, index)),
        ("conjugate 5040 elements", "conjugate_elements", (elements, g)),
        ("class-algebra combo S7", "combo_matrix",
         (elements, index, invs, labels, reps, coeffs, 211)),
    ]
    impls = [("python", _kernels_py)]
    if _kernels_c is not None:
        impls.append(("compiled", _kernels_c))
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name, _ in impls)
          + ("     speedup" if _kernels_c else ""))
    for label, fname, args in cases:
        times = [timeit(getattr(mod, fname), *args) for _, mod in impls]
        line = f"{label:34s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:11.1f}x"
        print(line)


CENSUS_SNIPPET = (
    "from charkit.catalog import parse_group;"
    "from charkit.permgroup import subgroups_up_to_conjugacy;"
    "import time; t0=time.perf_counter();"
    "recs = subgroups_up_to_conjugacy(parse_group('name:S5'));"
    "print(f'{time.perf_counter()-t0:.2f}')"
)


def bench_census():
    print("\nend-to-end: subgroup census of S5 (19 classes)")
    for label, env_extra in (("python", {"CHARKIT_PURE": "1"}),
                             ("compiled", {})):
        if label == "compiled" and _kernels_c is None:
            continue
        env = dict(os.environ, **env_extra)
        out = subprocess.run([sys.executable, "-c", CENSUS_SNIPPET],
                             capture_output=True, text=True, env=env)
        print(f"  {label:9s} {out.stdout.strip()}s")


if __name__ == "__main__":
    bench_kernels()
    bench_census()
