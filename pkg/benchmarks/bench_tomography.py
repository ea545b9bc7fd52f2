"""Compare the numba kernels with the sparse-matrix numpy fallback.

    python benchmarks/bench_tomography.py [--repeat 5]

Both paths run in this process; the switch is the CTOOD_DISABLE_NUMBA
environment variable, which the kernels read on every call. First calls
(JIT compilation, system-matrix assembly) are excluded from the timings and
reported separately.
"""
import argparse
import os
import time
import timeit

import numpy as np

from ctood import tomography as tg

CASES = [  # (label, angles, batch)
    ("radon", 180, 1), ("radon", 180, 200), ("radon", 18, 200),
    ("backproject", 180, 1), ("backproject", 180, 200), ("backproject", 18, 200),
    ("fbp", 180, 200), ("fbp", 9, 200),
]


def _op(name, geom, data):
    f = {"radon": tg.radon, "backproject": tg.backproject, "fbp": tg.fbp}[name]
    return lambda: f(data, geom)


def _inputs(name, geom, batch, rng):
    shape = geom.image_shape if name == "radon" else geom.sinogram_shape
    return rng.random((batch,) + shape)


def run(repeat):
    rng = np.random.default_rng(0)
    rows = []
    for name, n_ang, batch in CASES:
        geom = tg.ProjectionGeometry.uniform(n_ang)
        x = _inputs(name, geom, batch, rng)
        res, times, first = {}, {}, {}
        for path, flag in (("numba", "0"), ("numpy", "1")):
            os.environ["CTOOD_DISABLE_NUMBA"] = flag
            tg._system_matrix.cache_clear()
            f = _op(name, geom, x)
            t = time.perf_counter()
            res[path] = f()
            first[path] = time.perf_counter() - t
            times[path] = min(timeit.repeat(f, number=1, repeat=repeat))
        err = np.abs(res["numba"] - res["numpy"]).max() / max(np.abs(res["numpy"]).max(), 1e-300)
        rows.append((name, n_ang, batch, times["numba"], times["numpy"], first["numba"],
                     first["numpy"], err))
    os.environ.pop("CTOOD_DISABLE_NUMBA", None)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    rows = run(p.parse_args().repeat)
    head = ("op", "angles", "batch", "numba ms", "numpy ms", "speed-up", "first call (nb/np) ms",
            "max rel diff")
    print("| " + " | ".join(head) + " |")
    print("|" + "---|" * len(head))
    for name, a, b, tn, tp, fn, fp, err in rows:
        print(f"| {name} | {a} | {b} | {tn * 1e3:.2f} | {tp * 1e3:.2f} | {tp / tn:.1f}x | "
              f"{fn * 1e3:.0f} / {fp * 1e3:.0f} | {err:.1e} |")


if __name__ == "__main__":
    main()
