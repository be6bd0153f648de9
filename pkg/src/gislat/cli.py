"""Command-line interface: graph file ingestion, subcommands, JSON/DOT output.

Graph files are line oriented: ``vertex NAME`` declares a vertex, ``edge SRC
DST`` adds an edge (repeat the line for parallel edges), ``#`` starts a
comment.  Exit codes: 0 success, 1 failed property check, 2 input error,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import CapExceeded, Digraph, bits
from . import lattice as _lattice
from . import oracle as _oracle
from .census import simple_graphs
from .lattice import ConLattice, enumerate_lattice
from .triples import WangTriple, atoms

JSON_FORMAT = 1
CENSUS_BOUND_DEFAULT = 5

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class GraphParseError(ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_graph_text(text: str) -> Digraph:
    """Parse the line-oriented graph format, with positions on errors."""
    names = []
    index = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        keyword = tokens[0]
        col = line.index(keyword) + 1
        if keyword == "vertex":
            if len(tokens) != 2:
                raise GraphParseError("vertex takes exactly one name",
                                      lineno, col)
            name = tokens[1]
            if name in index:
                raise GraphParseError(f"duplicate vertex {name!r}", lineno, col)
            index[name] = len(names)
            names.append(name)
        elif keyword == "edge":
            if len(tokens) != 3:
                raise GraphParseError("edge takes a source and a range",
                                      lineno, col)
            for name in tokens[1:]:
                if name not in index:
                    raise GraphParseError(f"unknown vertex {name!r}",
                                          lineno, line.index(name, col) + 1)
            edges.append((index[tokens[1]], index[tokens[2]]))
        else:
            raise GraphParseError(f"unknown directive {keyword!r}", lineno, col)
    if not names:
        raise GraphParseError("no vertices declared", 1)
    return Digraph(names, edges)


def parse_graph_file(path: str) -> Digraph:
    if path == "-":
        return parse_graph_text(sys.stdin.read())
    with open(path, encoding="utf-8") as handle:
        return parse_graph_text(handle.read())


def format_graph(graph: Digraph) -> str:
    lines = [f"vertex {name}" for name in graph.names]
    lines += [f"edge {graph.names[s]} {graph.names[r]}" for s, r in graph.edges]
    return "\n".join(lines) + "\n"


# -- JSON and DOT rendering ----------------------------------------------------


def triple_json(t: WangTriple) -> dict:
    doc = {"H": t.graph.vertex_names(t.H), "W": t.graph.vertex_names(t.W)}
    if t.f:
        doc["f"] = [{"cycle": list(c), "value": v} for c, v in t.f]
    return doc


def triple_from_json(graph: Digraph, doc: dict) -> WangTriple:
    f = {tuple(entry["cycle"]): entry["value"] for entry in doc.get("f", [])}
    return WangTriple(graph, graph.vertex_set(doc["H"]),
                      graph.vertex_set(doc["W"]), f)


def graph_json(graph: Digraph) -> dict:
    return {"vertices": list(graph.names),
            "edges": [[graph.names[s], graph.names[r]] for s, r in graph.edges]}


def lattice_json(lat: ConLattice, properties: bool = False) -> dict:
    doc = {"format": JSON_FORMAT}
    doc.update(graph_json(lat.graph))
    doc["elements"] = [triple_json(t) for t in lat.elements]
    doc["covers"] = [[i, j] for i, j in lat.cover_list()]
    doc["bottom"] = lat.bottom
    doc["top"] = lat.top
    if properties:
        doc["properties"] = lattice_properties(lat)
    return doc


def lattice_from_json(doc: dict) -> ConLattice:
    graph = Digraph(doc["vertices"],
                    [(doc["vertices"].index(s), doc["vertices"].index(r))
                     for s, r in doc["edges"]])
    return ConLattice(graph, [triple_from_json(graph, e)
                              for e in doc["elements"]])


def lattice_properties(lat: ConLattice) -> dict:
    return {
        "elements": lat.n,
        "upper_semimodular": _lattice.is_upper_semimodular(lat),
        "lower_semimodular": _lattice.is_lower_semimodular(lat),
        "modular": _lattice.is_modular(lat),
        "distributive": _lattice.is_distributive(lat),
        "atomistic": _lattice.is_atomistic_lattice(lat),
    }


def triple_label(t: WangTriple) -> str:
    g = t.graph
    hs = "{" + ",".join(g.names[v] for v in bits(t.H)) + "}"
    ws = "{" + ",".join(g.names[v] for v in bits(t.W)) + "}"
    return f"({hs}, {ws})"


def lattice_dot(lat: ConLattice) -> str:
    # rank each element by its longest chain from the bottom
    depth = [0] * lat.n
    order = sorted(range(lat.n), key=lambda i: lat.down[i].bit_count())
    for i in order:
        for j in bits(lat.cover_up[i]):
            depth[j] = max(depth[j], depth[i] + 1)
    lines = ["digraph conlat {", "  rankdir=BT;", "  node [shape=box];"]
    for i, t in enumerate(lat.elements):
        lines.append(f'  n{i} [label="{triple_label(t)}"];')
    for i, j in lat.cover_list():
        lines.append(f"  n{i} -> n{j};")
    for d in range(max(depth) + 1 if lat.n else 0):
        members = [f"n{i}" for i in range(lat.n) if depth[i] == d]
        if members:
            lines.append("  {rank=same; " + "; ".join(members) + ";}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subcommands -----------------------------------------------------------------


def _emit(doc, human_lines, as_json):
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        for line in human_lines:
            print(line)


def cmd_check(args) -> int:
    graph = parse_graph_file(args.path)
    forked = graph.vertex_names(graph.forked_vertices())
    doc = {"format": JSON_FORMAT}
    doc.update(graph_json(graph))
    doc["forked"] = forked
    doc["lower_semimodular"] = _lattice.predicate_lower_semimodular(graph)
    try:
        doc["condition_iv"] = _lattice.predicate_condition_iv(graph)
    except ValueError as exc:
        doc["condition_iv"] = None
        doc["condition_iv_error"] = str(exc)
    doc["atomistic_predicate"] = _lattice.predicate_atomistic(graph)
    the_atoms = atoms(graph)
    doc["atoms"] = [triple_json(t) for t in the_atoms]
    lines = [
        f"graph: {graph.n} vertices, {graph.m} edges",
        "forked vertices: " + (", ".join(forked) if forked else "(none)"),
        f"lower-semimodular: {'yes' if doc['lower_semimodular'] else 'no'}",
    ]
    if doc["condition_iv"] is None:
        lines.append(f"condition (iv): n/a ({doc['condition_iv_error']})")
    else:
        lines.append(f"condition (iv): {'yes' if doc['condition_iv'] else 'no'}")
    lines.append(
        f"atomistic: {'yes' if doc['atomistic_predicate'] else 'no'}")
    lines.append(f"atoms ({len(the_atoms)}): "
                 + ", ".join(repr(t) for t in the_atoms))
    _emit(doc, lines, args.json)
    return EXIT_OK


def cmd_lattice(args) -> int:
    graph = parse_graph_file(args.path)
    if not graph.is_acyclic():
        print("error: graph has cycles, so its congruence lattice is "
              "infinite; use 'check' for the pointwise predicates",
              file=sys.stderr)
        return EXIT_INPUT
    lat = enumerate_lattice(graph, cap=args.cap)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(lattice_dot(lat))
    doc = lattice_json(lat, properties=args.properties)
    lines = [f"elements: {lat.n}",
             f"covers: {len(doc['covers'])}",
             f"bottom covers: {lat.cover_up[lat.bottom].bit_count()}"]
    if args.properties:
        for key, val in doc["properties"].items():
            if key != "elements":
                lines.append(f"{key.replace('_', '-')}: "
                             f"{'yes' if val else 'no'}")
    if args.dot:
        lines.append(f"DOT written to {args.dot}")
    _emit(doc, lines, args.json)
    return EXIT_OK


def cmd_generators(args) -> int:
    graph = parse_graph_file(args.path)
    if not graph.is_simple():
        print("error: generators requires a simple graph "
              "(acyclic, no parallel edges)", file=sys.stderr)
        return EXIT_INPUT
    gens = _lattice.minimal_generating_set(graph)
    lat = enumerate_lattice(graph, cap=args.cap)
    closure = _lattice.generated_sublattice(lat, gens)
    ok = len(closure) == lat.n
    doc = {"format": JSON_FORMAT}
    doc.update(graph_json(graph))
    doc["generators"] = [triple_json(t) for t in gens]
    doc["lattice_elements"] = lat.n
    doc["closure_elements"] = len(closure)
    doc["closure_check"] = "PASS" if ok else "FAIL"
    lines = [f"generators ({len(gens)}):"]
    lines += [f"  {t!r}" for t in gens]
    lines.append(f"closure check: {doc['closure_check']} "
                 f"({len(closure)} of {lat.n} elements)")
    _emit(doc, lines, args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    graph = parse_graph_file(args.path)
    if not graph.is_acyclic():
        print("error: the oracle needs a finite semigroup, so the graph "
              "must be acyclic", file=sys.stderr)
        return EXIT_INPUT
    table = _oracle.build_semigroup(graph, element_cap=args.oracle_cap)
    bad = _oracle.associativity_violations(table, seed=args.seed)
    report = _oracle.verify_isomorphism(graph, element_cap=args.oracle_cap,
                                        lattice_cap=args.cap)
    failures = list(report.failures)
    if bad:
        failures.insert(0, f"{len(bad)} associativity violations")
    ok = report.passed and not bad
    doc = {"format": JSON_FORMAT}
    doc.update(graph_json(graph))
    doc["semigroup_size"] = report.semigroup_size
    doc["lattice_elements"] = report.lattice_size
    doc["congruences"] = report.congruence_count
    doc["result"] = "PASS" if ok else "FAIL"
    doc["failures"] = failures
    lines = [f"semigroup size: {report.semigroup_size}",
             f"lattice elements: {report.lattice_size}",
             f"congruences: {report.congruence_count}",
             f"oracle check: {doc['result']}"]
    lines += [f"  {msg}" for msg in failures]
    _emit(doc, lines, args.json)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_census(args) -> int:
    if args.max_vertices > args.bound:
        raise CapExceeded(
            f"census bound is {args.bound} vertices (got {args.max_vertices})")
    if args.max_vertices < 1:
        print("error: census needs at least one vertex", file=sys.stderr)
        return EXIT_INPUT
    groups = []
    for n in range(1, args.max_vertices + 1):
        entries = []
        for g in simple_graphs(n, connected=True):
            entries.append({
                "edges": [[int(g.names[s]), int(g.names[r])]
                          for s, r in g.edges],
                "lower_semimodular": _lattice.predicate_lower_semimodular(g),
            })
        groups.append({"vertices": n, "graphs": entries})
    doc = {"format": JSON_FORMAT, "max_vertices": args.max_vertices,
           "census": groups}
    lines = []
    for group in groups:
        total = len(group["graphs"])
        good = sum(1 for e in group["graphs"] if e["lower_semimodular"])
        lines.append(f"{group['vertices']} vertices: {total} connected "
                     f"simple graphs, {good} lower-semimodular")
        for e in group["graphs"]:
            mark = "+" if e["lower_semimodular"] else "-"
            shown = " ".join(f"{s}->{r}" for s, r in e["edges"]) or "(no edges)"
            lines.append(f"  {mark} {shown}")
    _emit(doc, lines, args.json)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gislat",
        description="Congruence lattices of graph inverse semigroups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_cap=True):
        p.add_argument("path", help="graph file, or - for stdin")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        if with_cap:
            p.add_argument("--cap", type=int, default=_lattice.DEFAULT_LATTICE_CAP,
                           help="lattice element cap")

    p = sub.add_parser("check", help="graph-level predicates and atoms")
    add_common(p, with_cap=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lattice", help="enumerate the full lattice (acyclic)")
    add_common(p)
    p.add_argument("--dot", metavar="FILE", help="write a DOT Hasse diagram")
    p.add_argument("--properties", action="store_true",
                   help="include the lattice property summary")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("generators", help="minimal generating set (simple)")
    add_common(p)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("oracle", help="brute-force congruence cross-check")
    add_common(p)
    p.add_argument("--oracle-cap", type=int,
                   default=_oracle.DEFAULT_ELEMENT_CAP,
                   help="semigroup size cap")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized associativity spot-checks")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("census", help="classify small connected simple graphs")
    p.add_argument("max_vertices", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--bound", type=int, default=CENSUS_BOUND_DEFAULT,
                   help="largest permitted vertex count")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
