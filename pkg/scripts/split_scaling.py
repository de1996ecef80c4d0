"""Distinct DP states for Split and HeldKarp as |s| grows.

With all strings of length one, both methods only track how many copies of
each distinct string are used, so the count stays quadratic in |s| even though
the number of subsets is 2^|s|.
"""

import argparse
import time

from craftbench.bitstring import BitString
from craftbench.crafting import CraftingInstance, Method, solve_detailed


def families(size):
    yield "ones", CraftingInstance(BitString.ones(size), tuple(BitString.ones(1) for _ in range(size)))
    half = size // 2
    yield "mixed", CraftingInstance(
        BitString.from_str("10" * half + "1" * (size - 2 * half)),
        tuple(BitString.from_str(c) for c in "1" * (size - half) + "0" * half))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64, 128])
    args = ap.parse_args(argv)
    print(f"{'family':6} {'|s|':>5} {'method':>9} {'states':>8} {'(|s|+1)^2':>10} {'seconds':>8}")
    for size in args.sizes:
        for name, inst in families(size):
            for method in (Method.SPLIT, Method.HELD_KARP):
                t0 = time.perf_counter()
                res = solve_detailed(inst, method)
                dt = time.perf_counter() - t0
                print(f"{name:6} {size:5d} {method.value:>9} {res.states:8d} "
                      f"{(size + 1) ** 2:10d} {dt:8.3f}")


if __name__ == "__main__":
    main()
