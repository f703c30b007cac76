"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 8,10,12,14]

Inputs are gamma-extensions of random rank-4/5 binary matroids, which is
what the sweeps spend their time on.  Each line reports the best-of-N wall
time per call for both backends and the speedup.
"""

import argparse
import random
import timeit

import numpy as np

from gammaext import kernels


def sample_columns(n, r, rng):
    cols = [1 << i for i in range(r)]
    while len(cols) < n:
        cols.append(rng.randrange(1, 1 << r))
    rng.shuffle(cols)
    return cols


def cycle_basis(cols):
    basis, cycles = {}, []
    for e, v in enumerate(cols):
        mask = 1 << e
        while v:
            h = v.bit_length() - 1
            if h not in basis:
                basis[h] = (v, mask)
                break
            v ^= basis[h][0]
            mask ^= basis[h][1]
        else:
            cycles.append(mask)
    return cycles


def best(fn, repeat):
    t = timeit.Timer(fn)
    number, _ = t.autorange()
    return min(t.repeat(repeat, number)) / number


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--sizes", default="8,10,12,14")
    p.add_argument("--seed", type=int, default=7)
    args = p.parse_args(argv)

    mods = kernels.backends()
    if "compiled" not in mods:
        print("compiled backend not built; only the numpy fallback is available")
    rng = random.Random(args.seed)
    print(f"{'kernel':<18}{'n':>4}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    for n in map(int, args.sizes.split(",")):
        cols = sample_columns(n, 5 if n > 10 else 4, rng)
        r = kernels.column_rank(cols)
        ranks = np.asarray(mods["python"].rank_table(cols), dtype=np.int64)
        basis = cycle_basis(cols)
        cases = {
            "rank_table": lambda m: m.rank_table(cols),
            "least_separation": lambda m: m.least_separation(ranks, n, r, 3),
            "minimal_supports": lambda m: m.minimal_supports(basis),
        }
        for name, call in cases.items():
            times = {k: best(lambda m=m: call(m), args.repeat) for k, m in mods.items()}
            py = times["python"] * 1e3
            if "compiled" in times:
                c = times["compiled"] * 1e3
                print(f"{name:<18}{n:>4}{py:>14.3f}{c:>16.3f}{py / c:>9.1f}x")
            else:
                print(f"{name:<18}{n:>4}{py:>14.3f}{'-':>16}{'-':>10}")


if __name__ == "__main__":
    main()
