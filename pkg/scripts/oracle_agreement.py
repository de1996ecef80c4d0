"""Sweep random palindromic SC instances through every caterpillar variant and
containment relation; report per-combination agreement and seconds.

    python3 scripts/oracle_agreement.py --count 100 --seed 4 --csv out.csv
"""

import argparse
import csv
import random
import sys
import time
from collections import defaultdict

from craftbench.crafting import solve, verify_witness
from craftbench.oracles import BudgetExceeded, Relation, embed_bf, verify_embedding
from craftbench.random_instances import DEFAULT_SEED, random_sc_palindromic
from craftbench.reductions import Variant, decode_perm_from_embedding, sc_to_subgraph

COMBOS = [
    (Variant.CATERPILLAR, Relation.SUBGRAPH, None),
    (Variant.CATERPILLAR, Relation.MINOR, None),
    (Variant.CATERPILLAR, Relation.TOP_MINOR, None),
    (Variant.CATERPILLAR, Relation.SHALLOW_MINOR, 1),
    (Variant.INDUCED, Relation.INDUCED, None),
    (Variant.INDUCED, Relation.INDUCED_MINOR, None),
    (Variant.CONNECTED, Relation.SUBGRAPH, None),
    (Variant.INDUCED_CONNECTED, Relation.INDUCED, None),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("--budget", type=int, default=None, help="per-call state budget (default: none)")
    ap.add_argument("--csv", help="write one row per (instance, combination)")
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    rows, seconds, outcome = [], defaultdict(float), defaultdict(lambda: defaultdict(int))
    for k in range(args.count):
        inst = random_sc_palindromic(rng, max_len=args.max_len)
        answer = solve(inst) is not None
        for variant, relation, radius in COMBOS:
            host, pattern, smap = sc_to_subgraph(inst, variant)
            key = f"{variant.value}/{relation.value}"
            t0 = time.perf_counter()
            try:
                found = embed_bf(pattern, host, relation, radius=radius, budget=args.budget)
            except BudgetExceeded:
                status = "budget"
            else:
                status = "agree" if (found is not None) == answer else "MISMATCH"
                if found is not None and status == "agree":
                    ok = verify_embedding(pattern, host, found) and verify_witness(
                        inst, decode_perm_from_embedding(smap, found))
                    status = status if ok else "BADWITNESS"
            dt = time.perf_counter() - t0
            seconds[key] += dt
            outcome[key][status] += 1
            rows.append({"index": k, "s": str(inst.s), "ts": " ".join(map(str, inst.ts)),
                         "combo": key, "answer": answer, "status": status, "seconds": f"{dt:.4f}"})

    print(f"{'combination':34} {'agree':>6} {'other':>6} {'seconds':>9}")
    for key in seconds:
        other = sum(v for s, v in outcome[key].items() if s != "agree")
        print(f"{key:34} {outcome[key]['agree']:6d} {other:6d} {seconds[key]:9.2f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
    bad = sum(v for o in outcome.values() for s, v in o.items() if s in ("MISMATCH", "BADWITNESS"))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
