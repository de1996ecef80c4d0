"""End-to-end round trips: source oracle, reduction, target oracle, witness transfer."""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field

from craftbench.bitstring import Mode, complement
from craftbench.crafting import CraftingInstance, solve, verify_witness
from craftbench.graph import validate_decomposition, validate_interval_model
from craftbench.oracles import (
    BudgetExceeded, Relation, Shape, embed_bf, intervalize_exact, mspd_exact, sat_bf,
    verify_embedding, x3c_bf,
)
from craftbench.problems import CnfFormula, X3cInstance
from craftbench.reductions import (
    PreconditionError, Variant, build_icg5_witness, build_icg_witness_x3c, build_mspd_witness,
    complement_to_ovc, decode_assignment, decode_perm_from_embedding, encode_assignment,
    encode_embedding, ovc_to_icg5, ovc_to_mspd, sat_to_sc, sc_to_subgraph, x3c_to_icg,
)
from craftbench.reductions.mspd import BASE_WIDTH, decode_perm_from_decomposition
from craftbench.reductions.subgraph import check_regime


class Target(enum.Enum):
    SC = "SC"
    OVC = "OVC"
    SUBGRAPH = "SUBGRAPH"
    MSPD = "MSPD"
    ICG5 = "ICG5"
    ICG = "ICG"


class Verdict(enum.Enum):
    SUCCESS = 0
    DISAGREEMENT = 1
    INCONCLUSIVE = 2


@dataclass(frozen=True)
class Budgets:
    vertices: int = 32
    states: int = 2_000_000
    intervalize_vertices: int = 15


@dataclass
class Stage:
    name: str
    problem: str
    answer: bool | None = None  # None: not decided
    status: str = "ok"  # ok | SKIPPED(budget) | SKIPPED(n/a) | FAILED
    seconds: float = 0.0
    detail: str = ""


@dataclass
class PipelineReport:
    source: str
    target: Target
    sizes: dict[str, int] = field(default_factory=dict)
    stages: list[Stage] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def answers(self) -> list[bool]:
        return [st.answer for st in self.stages if st.answer is not None]

    @property
    def verdict(self) -> Verdict:
        if len(set(self.answers)) > 1 or not all(self.checks.values()):
            return Verdict.DISAGREEMENT
        if any(st.status == "FAILED" for st in self.stages):
            return Verdict.DISAGREEMENT
        decided = [st for st in self.stages if st.answer is not None]
        if len(decided) < 2:
            return Verdict.INCONCLUSIVE
        return Verdict.SUCCESS

    @property
    def exit_code(self) -> int:
        return self.verdict.value

    def as_dict(self, timings: bool = False) -> dict:
        out = {"source": self.source, "target": self.target.value, "sizes": dict(self.sizes),
               "stages": [], "checks": dict(self.checks), "witnesses": dict(self.witnesses),
               "notes": list(self.notes),
               "verdict": self.verdict.name}
        for st in self.stages:
            row = {"name": st.name, "problem": st.problem, "answer": _yn(st.answer),
                   "status": st.status, "detail": st.detail}
            if timings:
                row["seconds"] = round(st.seconds, 4)
            out["stages"].append(row)
        return out

    def render(self, timings: bool = False) -> str:
        rows = [f"source={self.source}", f"target={self.target.value}"]
        rows += [f"size.{k}={v}" for k, v in self.sizes.items()]
        for st in self.stages:
            rows.append(f"stage.{st.name}.problem={st.problem}")
            rows.append(f"stage.{st.name}.answer={_yn(st.answer)}")
            rows.append(f"stage.{st.name}.status={st.status}")
            if st.detail:
                rows.append(f"stage.{st.name}.detail={st.detail}")
            if timings:
                rows.append(f"stage.{st.name}.seconds={st.seconds:.4f}")
        rows += [f"check.{k}={'pass' if v else 'FAIL'}" for k, v in self.checks.items()]
        rows += [f"witness.{k}={v}" for k, v in self.witnesses.items()]
        rows += [f"note={n}" for n in self.notes]
        rows.append(f"verdict={self.verdict.name}")
        return "\n".join(rows) + "\n"

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=True)


def _yn(answer: bool | None) -> str:
    return "unknown" if answer is None else ("yes" if answer else "no")


class _Timer:
    def __init__(self, stage: Stage):
        self.stage = stage

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.stage

    def __exit__(self, exc_type, exc, tb):
        self.stage.seconds = time.perf_counter() - self.t0
        if exc_type is BudgetExceeded:
            self.stage.status = "SKIPPED(budget)"
            self.stage.detail = str(exc)
            return True
        return False


def _stage(report: PipelineReport, name: str, problem: str) -> _Timer:
    st = Stage(name, problem)
    report.stages.append(st)
    return _Timer(st)


def roundtrip(source: CnfFormula | CraftingInstance | X3cInstance, target: Target | str,
              budgets: Budgets = Budgets(), variant: Variant = Variant.CATERPILLAR) -> PipelineReport:
    """Run every stage that fits the budgets and cross-check the answers."""
    target = Target(target)
    if isinstance(source, X3cInstance):
        return _x3c_roundtrip(source, target, budgets)
    if target is Target.ICG:
        raise ValueError("target ICG needs an X3C source")

    if isinstance(source, CnfFormula):
        report = PipelineReport("cnf", target, {"vars": source.num_vars, "clauses": source.num_clauses})
        with _stage(report, "sat_bf", "3SAT") as st:
            assignment = sat_bf(source)
            st.answer = assignment is not None
        if assignment is not None:
            report.witnesses["sat_bf"] = " ".join(str(i + 1 if b else -(i + 1))
                                                  for i, b in enumerate(assignment))
        inst, smap = sat_to_sc(source)
        report.sizes["s"] = len(inst.s)
        report.sizes["strings"] = inst.n
        with _stage(report, "sc_solve", "SC") as st:
            w = solve(inst)
            st.answer = w is not None
        if w is not None:
            report.witnesses["sc_solve"] = str(w)
            decoded = decode_assignment(smap, inst, w)
            report.checks["decode_assignment"] = source.satisfied_by(decoded)
        if assignment is not None:
            report.checks["encode_assignment"] = verify_witness(
                inst, encode_assignment(source, smap, inst, assignment))
    else:
        report = PipelineReport(f"crafting-{source.mode.value}", target,
                                {"s": len(source.s), "strings": source.n})
        inst = source
        with _stage(report, f"{inst.mode.value.lower()}_solve", inst.mode.value) as st:
            w = solve(inst)
            st.answer = w is not None
            if w is not None:
                report.witnesses[st.name] = str(w)
                report.checks["source_witness"] = verify_witness(inst, w)

    if target is Target.SC:
        if inst.mode is not Mode.DOMINATION:
            raise ValueError("target SC needs a CNF or SC source")
        return report
    if target is Target.SUBGRAPH:
        if inst.mode is not Mode.DOMINATION:
            inst = CraftingInstance(complement(inst.s), inst.ts, Mode.DOMINATION)
            with _stage(report, "sc_solve", "SC") as st:
                w = solve(inst)
                st.answer = w is not None
        _subgraph_stage(report, inst, w, budgets, variant)
        return report

    if inst.mode is Mode.DOMINATION:
        inst = complement_to_ovc(inst)
        with _stage(report, "ovc_solve", "OVC") as st:
            w = solve(inst)
            st.answer = w is not None
    if target is Target.OVC:
        return report
    palindromic = all(str(t) == str(t)[::-1] for t in inst.ts)
    if not palindromic:
        report.notes.append("non-palindromic strings: only the constructive direction is claimed")
    if target is Target.MSPD:
        _mspd_stage(report, inst, w, budgets)
    else:
        _icg5_stage(report, inst, w, budgets)
    return report


def _subgraph_stage(report, inst, w, budgets, variant):
    try:
        check_regime(inst.ts)
    except PreconditionError as exc:
        report.notes.append(f"precondition relaxed: {exc}")
    host, pattern, smap = sc_to_subgraph(inst, variant, permissive=True)
    report.sizes["host_vertices"] = host.n
    report.sizes["pattern_vertices"] = pattern.n
    relation = Relation.INDUCED if variant.induced else Relation.SUBGRAPH
    if w is not None:
        emb = encode_embedding(smap, inst, w)
        report.checks["encode_embedding"] = all(host.has_edge(emb[a], emb[b]) for a, b in pattern.edges)
    with _stage(report, "embed_bf", variant.value) as st:
        if host.n > budgets.vertices:
            st.status = "SKIPPED(budget)"
            st.detail = f"{host.n} host vertices > {budgets.vertices}"
            return
        found = embed_bf(pattern, host, relation, budget=budgets.states)
        st.answer = found is not None
        if found is not None:
            report.witnesses["embed_bf"] = str(decode_perm_from_embedding(smap, found))
            report.checks["embedding_valid"] = verify_embedding(pattern, host, found)
            report.checks["decoded_perm"] = verify_witness(inst, decode_perm_from_embedding(smap, found))


def _mspd_stage(report, inst, w, budgets):
    g, bags, smap = ovc_to_mspd(inst, permissive=True)
    report.sizes["graph_vertices"] = g.n
    report.sizes["bag_budget"] = bags
    if w is not None:
        with _stage(report, "build_mspd_witness", "MSPD") as st:
            d = build_mspd_witness(smap, inst, w)
            ok = validate_decomposition(g, d, BASE_WIDTH, bags)
            report.checks["decomposition_valid"] = ok
            report.checks["decoded_perm"] = verify_witness(inst, decode_perm_from_decomposition(smap, d))
            st.answer = True if ok else None
            st.detail = "bag sizes " + ",".join(str(len(b)) for b in d.bags)
    with _stage(report, "mspd_exact", "MSPD") as st:
        if g.n > budgets.vertices:
            st.status = "SKIPPED(budget)"
            st.detail = f"{g.n} vertices > {budgets.vertices}"
            return
        d = mspd_exact(g, BASE_WIDTH, bags, Shape.PATH, budget=budgets.states)
        st.answer = d is not None
        if d is not None:
            report.checks["exact_decomposition_valid"] = validate_decomposition(g, d, BASE_WIDTH, bags)


def _icg5_stage(report, inst, w, budgets):
    cg, imap = ovc_to_icg5(inst, permissive=True)
    report.sizes["tree_vertices"] = cg.n
    report.checks["is_tree"] = cg.graph.is_tree()
    if w is not None:
        with _stage(report, "build_icg5_witness", "ICG5") as st:
            ok = validate_interval_model(cg, build_icg5_witness(imap, inst, w))
            report.checks["interval_model_valid"] = ok
            st.answer = True if ok else None
    _intervalize_stage(report, cg, budgets, "ICG5")


def _intervalize_stage(report, cg, budgets, problem):
    with _stage(report, "intervalize_exact", problem) as st:
        limit = min(budgets.vertices, budgets.intervalize_vertices)
        if cg.n > limit:
            st.status = "SKIPPED(budget)"
            st.detail = f"{cg.n} vertices > {limit}"
            return
        model = intervalize_exact(cg, vertex_budget=limit, state_budget=budgets.states)
        st.answer = model is not None
        if model is not None:
            report.checks["exact_model_valid"] = validate_interval_model(cg, model)


def _x3c_roundtrip(x3c: X3cInstance, target: Target, budgets: Budgets) -> PipelineReport:
    if target is not Target.ICG:
        raise ValueError("an X3C source only reduces to target ICG")
    report = PipelineReport("x3c", target, {"n": x3c.n, "m": x3c.m})
    with _stage(report, "x3c_bf", "X3C") as st:
        cover = x3c_bf(x3c)
        st.answer = cover is not None
    if cover is not None:
        report.witnesses["x3c_bf"] = " ".join(map(str, cover))
    try:
        cg, xmap = x3c_to_icg(x3c)
    except PreconditionError as exc:
        report.notes.append(f"reduction not applicable: {exc}")
        return report
    report.sizes["tree_vertices"] = cg.n
    report.checks["is_tree"] = cg.graph.is_tree()
    if cover is not None:
        with _stage(report, "build_icg_witness", "ICG") as st:
            ok = validate_interval_model(cg, build_icg_witness_x3c(xmap, x3c, cover))
            report.checks["interval_model_valid"] = ok
            st.answer = True if ok else None
    _intervalize_stage(report, cg, budgets, "ICG")
    return report
