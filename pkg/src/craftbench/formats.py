"""Plain-text readers and writers for instances, witnesses and certificates."""

from __future__ import annotations

from craftbench.bitstring import BitString, Mode
from craftbench.crafting import CraftingInstance, InstanceError, Witness
from craftbench.graph import ColoredGraph, Graph, IntervalModel, PathDecomposition, TreeDecomposition
from craftbench.problems import CnfFormula, X3cInstance


class FormatError(ValueError):
    """Parse failure with a stable error code and a 1-based line number."""

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{code}: {message}{where}")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield no, line


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    clauses: list[tuple[int, int, int]] = []
    pending: list[tuple[int, int]] = []  # (literal, line)
    for no, line in _lines(text):
        if line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise FormatError("E_HEADER", f"malformed header {line!r}", no)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError("E_HEADER", f"malformed header {line!r}", no) from None
            continue
        if header is None:
            raise FormatError("E_HEADER", "clause before 'p cnf' header", no)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise FormatError("E_TOKEN", f"not an integer: {tok!r}", no) from None
            if lit == 0:
                if len(pending) != 3:
                    raise FormatError("E_ARITY", f"clause has {len(pending)} literals, expected 3", no)
                clauses.append(tuple(l for l, _ in pending))
                pending = []
                continue
            if abs(lit) > header[0]:
                raise FormatError("E_RANGE", f"literal {lit} outside 1..{header[0]}", no)
            pending.append((lit, no))
    if header is None:
        raise FormatError("E_HEADER", "missing 'p cnf' header")
    if pending:
        raise FormatError("E_ARITY", "unterminated final clause", pending[-1][1])
    if len(clauses) != header[1]:
        raise FormatError("E_HEADER", f"header promises {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def write_dimacs(cnf: CnfFormula) -> str:
    rows = [f"p cnf {cnf.num_vars} {cnf.num_clauses}"]
    rows += [" ".join(map(str, c)) + " 0" for c in cnf.clauses]
    return "\n".join(rows) + "\n"


def parse_crafting(text: str) -> CraftingInstance:
    rows = list(_lines(text))
    if len(rows) < 3:
        raise FormatError("E_SHAPE", "need a mode line, s and at least one t")
    no, tag = rows[0]
    try:
        mode = Mode(tag)
    except ValueError:
        raise FormatError("E_MODE", f"unknown mode {tag!r}, expected SC or OVC", no) from None
    strings = []
    for no, line in rows[1:]:
        if set(line) - {"0", "1"}:
            raise FormatError("E_BITS", f"not a 0/1 string: {line!r}", no)
        strings.append(BitString.from_str(line))
    s, ts = strings[0], strings[1:]
    if sum(len(t) for t in ts) != len(s):
        raise FormatError("E_LENSUM", f"sum of |t_i| is {sum(len(t) for t in ts)}, |s| is {len(s)}")
    try:
        return CraftingInstance(s, tuple(ts), mode)
    except InstanceError as exc:
        raise FormatError("E_INSTANCE", str(exc)) from None


def write_crafting(inst: CraftingInstance) -> str:
    return "\n".join([inst.mode.value, str(inst.s), *map(str, inst.ts)]) + "\n"


def parse_x3c(text: str) -> X3cInstance:
    rows = list(_lines(text))
    if not rows:
        raise FormatError("E_HEADER", "empty X3C file")
    no, head = rows[0]
    try:
        n, m = map(int, head.split())
    except ValueError:
        raise FormatError("E_HEADER", f"expected 'n m', got {head!r}", no) from None
    if len(rows) - 1 != m:
        raise FormatError("E_HEADER", f"header promises {m} sets, found {len(rows) - 1}", no)
    sets = []
    for no, line in rows[1:]:
        try:
            xs = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError("E_TOKEN", f"bad set line {line!r}", no) from None
        if len(xs) != 3 or len(set(xs)) != 3:
            raise FormatError("E_ARITY", f"need 3 distinct elements, got {xs}", no)
        if not all(1 <= x <= n for x in xs):
            raise FormatError("E_RANGE", f"element outside 1..{n}", no)
        sets.append(frozenset(xs))
    try:
        return X3cInstance(n, tuple(sets))
    except ValueError as exc:
        raise FormatError("E_INSTANCE", str(exc)) from None


def write_x3c(x3c: X3cInstance) -> str:
    return "\n".join([f"{x3c.n} {x3c.m}", *(" ".join(map(str, sorted(s))) for s in x3c.sets)]) + "\n"


def parse_witness(text: str) -> Witness:
    try:
        return Witness(tuple(int(tok) for tok in text.split()))
    except ValueError as exc:
        raise FormatError("E_WITNESS", str(exc)) from None


def write_witness(w: Witness) -> str:
    return str(w) + "\n"


def write_graph(g: Graph | ColoredGraph) -> str:
    colours = None
    if isinstance(g, ColoredGraph):
        g, colours = g.graph, g.colors
    rows = [f"{g.n} {g.m}", *(f"{u} {v}" for u, v in g.edges)]
    if colours is not None:
        rows += ["colors", *map(str, colours)]
    return "\n".join(rows) + "\n"


def parse_graph(text: str) -> Graph | ColoredGraph:
    rows = list(_lines(text))
    if not rows:
        raise FormatError("E_HEADER", "empty graph file")
    no, head = rows[0]
    try:
        n, m = map(int, head.split())
    except ValueError:
        raise FormatError("E_HEADER", f"expected 'n m', got {head!r}", no) from None
    g = Graph(n)
    for no, line in rows[1:1 + m]:
        try:
            u, v = map(int, line.split())
            g.add_edge(u, v)
        except ValueError as exc:
            raise FormatError("E_EDGE", str(exc), no) from None
    rest = rows[1 + m:]
    if not rest:
        return g
    no, tag = rest[0]
    if tag != "colors" or len(rest) - 1 != n:
        raise FormatError("E_COLORS", "expected 'colors' followed by one colour per vertex", no)
    try:
        return ColoredGraph(g, [int(line) for _, line in rest[1:]])
    except ValueError as exc:
        raise FormatError("E_COLORS", str(exc), no) from None


def write_decomposition(d: PathDecomposition | TreeDecomposition) -> str:
    rows = [" ".join(map(str, sorted(bag))) for bag in d.bags]
    if isinstance(d, TreeDecomposition):
        rows.append("parents " + " ".join(map(str, d.parents)))
    return "\n".join(rows) + "\n"


def parse_decomposition(text: str) -> PathDecomposition | TreeDecomposition:
    bags, parents = [], None
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("parents"):
            parents = [int(tok) for tok in line.split()[1:]]
        else:
            bags.append([int(tok) for tok in line.split()])
    while bags and not bags[-1]:
        bags.pop()
    if parents is None:
        return PathDecomposition(bags)
    return TreeDecomposition(bags, parents)


def write_intervals(m: IntervalModel) -> str:
    return "".join(f"{lo} {hi}\n" for lo, hi in m.intervals)


def parse_intervals(text: str) -> IntervalModel:
    return IntervalModel([tuple(map(int, line.split())) for _, line in _lines(text)])
