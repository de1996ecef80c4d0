"""Command line front end: generate, solve, verify, reduce, roundtrip."""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from craftbench import formats, random_instances
from craftbench.crafting import Method, solve_detailed, verify_witness
from craftbench.graph import decomposition_errors, interval_model_errors
from craftbench.pipeline import Budgets, Target, roundtrip
from craftbench.reductions import (
    Variant, complement_to_ovc, ovc_to_icg5, ovc_to_mspd, sat_to_sc, sc_to_subgraph, x3c_to_icg,
)

log = logging.getLogger("craftbench")

GENERATORS = {
    "crafting": lambda rng: formats.write_crafting(random_instances.random_crafting(rng)),
    "sc-palindromic": lambda rng: formats.write_crafting(random_instances.random_sc_palindromic(rng)),
    "ovc-yes": lambda rng: formats.write_crafting(random_instances.random_ovc_yes(rng)),
    "cnf": lambda rng: formats.write_dimacs(random_instances.random_cnf(rng)),
    "x3c": lambda rng: formats.write_x3c(random_instances.random_x3c(rng)),
}


def load_source(path: str):
    """Pick the parser from the extension: .cnf/.dimacs, .x3c, anything else is crafting."""
    text = Path(path).read_text()
    suffix = Path(path).suffix.lower()
    if suffix in (".cnf", ".dimacs"):
        return formats.parse_dimacs(text)
    if suffix == ".x3c":
        return formats.parse_x3c(text)
    return formats.parse_crafting(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    rng = random.Random(args.seed) if args.seed is not None else random_instances.rng_from_env()
    make = GENERATORS[args.kind]
    for _ in range(args.skip):
        make(rng)
    _emit(make(rng), args.out)
    return 0


def cmd_solve(args) -> int:
    inst = formats.parse_crafting(Path(args.instance).read_text())
    result = solve_detailed(inst, Method(args.method))
    if result.witness is None:
        print("no")
    else:
        print("yes")
        print(result.witness)
    log.info("states=%d", result.states)
    return 0


def cmd_verify(args) -> int:
    if args.what == "witness":
        inst = formats.parse_crafting(Path(args.instance).read_text())
        w = formats.parse_witness(Path(args.certificate).read_text())
        errors = [] if verify_witness(inst, w) else ["witness does not craft a valid string"]
    elif args.what == "decomposition":
        g = formats.parse_graph(Path(args.instance).read_text())
        g = getattr(g, "graph", g)
        d = formats.parse_decomposition(Path(args.certificate).read_text())
        errors = decomposition_errors(g, d, args.width, args.bags)
    else:
        cg = formats.parse_graph(Path(args.instance).read_text())
        if not hasattr(cg, "colors"):
            print("invalid: graph has no colour section")
            return 1
        errors = interval_model_errors(cg, formats.parse_intervals(Path(args.certificate).read_text()))
    if errors:
        for e in errors:
            print(f"invalid: {e}")
        return 1
    print("valid")
    return 0


def cmd_reduce(args) -> int:
    src = load_source(args.instance)
    kind = args.reduction
    if kind == "sat-sc":
        inst, _ = sat_to_sc(src)
        _emit(formats.write_crafting(inst), args.out)
    elif kind == "sc-ovc":
        _emit(formats.write_crafting(complement_to_ovc(src)), args.out)
    elif kind == "sc-subgraph":
        host, pattern, _ = sc_to_subgraph(src, Variant(args.variant), permissive=args.permissive)
        if args.out:
            Path(f"{args.out}.host.graph").write_text(formats.write_graph(host))
            Path(f"{args.out}.pattern.graph").write_text(formats.write_graph(pattern))
        else:
            sys.stdout.write("# host\n" + formats.write_graph(host))
            sys.stdout.write("# pattern\n" + formats.write_graph(pattern))
    elif kind == "ovc-mspd":
        g, bags, smap = ovc_to_mspd(src, args.width, permissive=args.permissive)
        log.info("question: width <= %d with at most %d bags", smap.width, bags)
        _emit(formats.write_graph(g), args.out)
    elif kind == "ovc-icg5":
        cg, _ = ovc_to_icg5(src, permissive=args.permissive)
        _emit(formats.write_graph(cg), args.out)
    else:
        cg, _ = x3c_to_icg(src)
        _emit(formats.write_graph(cg), args.out)
    return 0


def cmd_roundtrip(args) -> int:
    src = load_source(args.instance)
    budgets = Budgets(vertices=args.oracle_vertex_budget, states=args.oracle_state_budget)
    report = roundtrip(src, Target(args.target), budgets, Variant(args.variant))
    text = report.to_json(args.timings) + "\n" if args.json else report.render(args.timings)
    _emit(text, args.out)
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="craftbench", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a random instance")
    g.add_argument("kind", choices=sorted(GENERATORS))
    g.add_argument("--seed", type=int, help="overrides CRAFTBENCH_SEED")
    g.add_argument("--skip", type=int, default=0, help="discard this many instances first")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="decide a crafting instance")
    s.add_argument("instance")
    s.add_argument("--method", choices=[m.value for m in Method], default=Method.HELD_KARP.value)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a certificate")
    v.add_argument("what", choices=["witness", "decomposition", "intervals"])
    v.add_argument("instance", help="crafting instance or graph file")
    v.add_argument("certificate")
    v.add_argument("--width", type=int)
    v.add_argument("--bags", type=int)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", help="apply one reduction")
    r.add_argument("reduction", choices=["sat-sc", "sc-ovc", "sc-subgraph", "ovc-mspd", "ovc-icg5", "x3c-icg"])
    r.add_argument("instance")
    r.add_argument("--variant", choices=[x.value for x in Variant], default=Variant.CATERPILLAR.value)
    r.add_argument("--width", type=int, default=16)
    r.add_argument("--permissive", action="store_true", help="skip palindrome preconditions")
    r.add_argument("--out")
    r.set_defaults(func=cmd_reduce)

    t = sub.add_parser("roundtrip", help="cross-check a reduction end to end")
    t.add_argument("instance")
    t.add_argument("--target", choices=[x.value for x in Target], required=True)
    t.add_argument("--variant", choices=[x.value for x in Variant], default=Variant.CATERPILLAR.value)
    t.add_argument("--oracle-vertex-budget", type=int, default=Budgets.vertices)
    t.add_argument("--oracle-state-budget", type=int, default=Budgets.states)
    t.add_argument("--json", action="store_true", help="one JSON document instead of key=value lines")
    t.add_argument("--timings", action="store_true", help="include wall-clock seconds per stage")
    t.add_argument("--out")
    t.set_defaults(func=cmd_roundtrip)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (formats.FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
