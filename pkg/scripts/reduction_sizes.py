"""Vertex counts of every emitted graph against |s|, to eyeball the linear bounds."""

import argparse
import random

from craftbench.random_instances import DEFAULT_SEED, random_cnf, random_ovc_yes, random_x3c
from craftbench.reductions import (
    Variant, complement_to_ovc, ovc_to_icg5, ovc_to_mspd, sat_to_sc, sc_to_subgraph, x3c_to_icg,
)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    print("sat_to_sc: n m |s| strings | caterpillar host/pattern")
    for _ in range(args.count):
        cnf = random_cnf(rng)
        inst, _ = sat_to_sc(cnf)
        host, pattern, _ = sc_to_subgraph(inst, Variant.CATERPILLAR)
        print(f"  {cnf.num_vars} {cnf.num_clauses} {len(inst.s):5d} {inst.n:3d} | "
              f"{host.n}/{pattern.n}  ovc |s|={len(complement_to_ovc(inst).s)}")

    print("ovc: |s| | mspd vertices (bags) | icg5 tree vertices")
    for _ in range(args.count):
        inst = random_ovc_yes(rng)
        g, bags, _ = ovc_to_mspd(inst)
        cg, _ = ovc_to_icg5(inst)
        print(f"  {len(inst.s):3d} | {g.n:4d} ({bags}) | {cg.n:4d}")

    print("x3c: n m | tree vertices")
    for _ in range(args.count):
        x3c = random_x3c(rng)
        cg, _ = x3c_to_icg(x3c)
        print(f"  {x3c.n} {x3c.m} | {cg.n}")


if __name__ == "__main__":
    main()
