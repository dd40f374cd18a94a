"""Command-line front end.

Exit codes: 0 success, 1 usage/argument error, 2 parse/validation or I/O
error, 3 work budget exhausted. Every command first prints its resolved
configuration as a ``# config {...}`` line.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from dataclasses import asdict, dataclass, field

from . import __version__
from .bench import loglog_slope, run_bench
from .counting import (
    DEFAULT_BUDGET,
    closed_form_supported,
    find_noncount_witness,
    graph_count_from_tuples,
    node_labels,
    oracle_count,
    parse_substructure,
)
from .encoding import EncodingConfig, build_dictionary, encode_all
from .errors import ArgumentError, EscError, ValidationError
from .graph import Graph, erdos_renyi, from_edge_list, named_graph, to_edge_list
from .wl import (
    DEFAULT_TUPLE_BUDGET,
    CfiSpec,
    _split_histograms,
    cfi_graph,
    disjoint_union,
    esc_distinguish,
    esc_refine,
    fingerprint_line,
    kwl_refine,
    wl1_refine,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    hops: int | None = None
    tuples: str | None = None
    distance: str | None = None
    structure: str | None = None
    mode: str | None = None
    engine: str | None = None
    k: int | None = None
    ell: int | None = None
    mp: str | None = None
    seed: int | None = None
    budget: int | None = None
    out: str | None = None
    extra: dict = field(default_factory=dict)

    def echo(self) -> str:
        return "# config " + json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def write_atomic(path: str, data: str) -> None:
    """Write ``data`` to ``path`` via a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_graph(spec: str) -> Graph:
    """A path to an edge-list file, or a family name such as ``cycle(6)``."""
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return from_edge_list(fh.read())
    try:
        return named_graph(spec)
    except ArgumentError:
        raise ValidationError(f"{spec!r} is neither a readable file nor a known graph name") from None


def _emit(text: str, out: str | None, stdout) -> None:
    if out:
        write_atomic(out, text)
    else:
        stdout.write(text)


def _require(value, flag: str, command: str):
    if value is None:
        raise ArgumentError(f"{command} requires {flag}")
    return value


# -- commands -----------------------------------------------------------------


def cmd_encode(cfg: RunConfig, stdout) -> int:
    h = _require(cfg.hops, "--hops", "encode")
    g = load_graph(cfg.inputs[0])
    policy = cfg.tuples.replace("-", "_")
    config = EncodingConfig.from_distance(cfg.distance)
    if policy == "nodes":
        config = config.for_arity(1)
    encs = encode_all(g, policy, h, config)
    text = "".join(e.serialize(t) + "\n" for t, e in encs.items())
    _emit(text, cfg.out, stdout)
    if cfg.out:
        dictionary = build_dictionary(encs.values())
        write_atomic(cfg.out + ".dict.json", json.dumps(dictionary, sort_keys=True) + "\n")
        if g.original_ids is not None:
            write_atomic(cfg.out + ".idmap.json", json.dumps(list(g.original_ids)) + "\n")
        stdout.write(f"records={len(encs)} out={cfg.out}\n")
    return EXIT_OK


def cmd_count(cfg: RunConfig, stdout) -> int:
    g = load_graph(cfg.inputs[0])
    s = parse_substructure(_require(cfg.structure, "--structure", "count"), cfg.mode)
    engine = cfg.engine
    h = _require(cfg.hops, "--hops", "count")
    if engine in ("closed-form", "both") and not closed_form_supported(s):
        raise ArgumentError(f"no closed form for {s.name}; use --engine oracle")
    reports = {}
    if engine in ("oracle", "both"):
        reports["oracle"] = oracle_count(g, s, "node", budget=cfg.budget)
    if engine in ("closed-form", "both"):
        reports["closed_form"] = graph_count_from_tuples(g, s, h)
    names = list(reports)
    lines = ["node," + ",".join(names) + (",verdict" if engine == "both" else "")]
    for v in range(g.num_nodes):
        vals = [reports[n].per_node.get(v, 0) for n in names]
        row = f"{v}," + ",".join(map(str, vals))
        if engine == "both":
            row += "," + ("MATCH" if vals[0] == vals[1] else "MISMATCH")
        lines.append(row)
    totals = [reports[n].graph_total for n in names]
    summary = f"# total,{s.name}," + ",".join(map(str, totals))
    if engine == "both":
        summary += "," + ("MATCH" if totals[0] == totals[1] else "MISMATCH")
    lines.append(summary)
    _emit("\n".join(lines) + "\n", cfg.out, stdout)
    if cfg.out:
        stdout.write(summary + "\n")
    return EXIT_OK


def _two_graphs(cfg: RunConfig):
    if len(cfg.inputs) != 2:
        raise ArgumentError(f"{cfg.command} needs exactly two graphs")
    return load_graph(cfg.inputs[0]), load_graph(cfg.inputs[1])


def cmd_wl(cfg: RunConfig, stdout) -> int:
    g1, g2 = _two_graphs(cfg)
    k = cfg.k
    if k not in (1, 2, 3):
        raise ArgumentError("--k must be 1, 2 or 3")
    union = disjoint_union(g1, g2)
    part = wl1_refine(union) if k == 1 else kwl_refine(union, k, budget=cfg.budget or DEFAULT_TUPLE_BUDGET)
    h1, h2 = _split_histograms(part, g1.num_nodes)
    verdict = "DISTINGUISHED" if h1 != h2 else "EQUIVALENT"
    stdout.write(verdict + "\n")
    stdout.write("fingerprint1 " + fingerprint_line(h1.items()) + "\n")
    stdout.write("fingerprint2 " + fingerprint_line(h2.items()) + "\n")
    return EXIT_OK


def cmd_esc(cfg: RunConfig, stdout) -> int:
    g1, g2 = _two_graphs(cfg)
    h = _require(cfg.hops, "--hops", "esc")
    mp = cfg.mp == "on"
    policy = cfg.tuples.replace("-", "_")
    verdict = "DISTINGUISHED" if esc_distinguish(g1, g2, h, mp, policy) else "EQUIVALENT"
    stdout.write(verdict + "\n")
    stdout.write("fingerprint1 " + fingerprint_line(esc_refine(g1, h, None, mp, policy)) + "\n")
    stdout.write("fingerprint2 " + fingerprint_line(esc_refine(g2, h, None, mp, policy)) + "\n")
    return EXIT_OK


def cmd_cfi(cfg: RunConfig, stdout) -> int:
    spec = CfiSpec(_require(cfg.k, "--k", "cfi"), _require(cfg.ell, "--ell", "cfi"))
    g = cfi_graph(spec)
    text = to_edge_list(g)
    if cfg.out:
        write_atomic(cfg.out, text)
        stdout.write(f"nodes={g.num_nodes} edges={g.num_edges} out={cfg.out}\n")
    else:
        stdout.write(f"# nodes={g.num_nodes} edges={g.num_edges}\n")
        stdout.write(text)
    return EXIT_OK


def generate_corpus(n_graphs: int, seed: int, min_nodes: int = 10, max_nodes: int = 20) -> list[dict]:
    """Random graphs with per-node oracle counts of the nine benchmark targets."""
    rng = random.Random(seed)
    records = []
    for i in range(n_graphs):
        n = rng.randint(min_nodes, max_nodes)
        p = round(rng.uniform(0.1, 0.4), 6)
        g = erdos_renyi(n, p, rng.getrandbits(31))
        records.append(
            {"id": i, "n": g.num_nodes, "p": p, "edges": [list(e) for e in g.edges], "labels": node_labels(g)}
        )
    return records


def cmd_gen(cfg: RunConfig, stdout) -> int:
    seed = _require(cfg.seed, "--seed", "gen")
    extra = cfg.extra
    records = generate_corpus(extra["n_graphs"], seed, extra["min_nodes"], extra["max_nodes"])
    text = "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in records)
    _emit(text, cfg.out, stdout)
    if cfg.out:
        stdout.write(f"graphs={len(records)} out={cfg.out}\n")
    return EXIT_OK


def cmd_bench(cfg: RunConfig, stdout) -> int:
    h = _require(cfg.hops, "--hops", "bench")
    extra = cfg.extra
    sizes = extra["sizes"]
    rows = run_bench(sizes, extra["degree"], h, extra["rounds"], extra["repeats"], cfg.seed or 0) if sizes else []
    lines = ["size,edges,phase,ns"]
    lines.extend(f"{r.size},{r.edges},{r.phase},{r.ns}" for r in rows)
    for phase in ("esc_round", "subgraph_round"):
        slope = loglog_slope(rows, phase)
        if slope is not None:
            lines.append(f"# slope,{phase},{slope:.4f}")
    _emit("\n".join(lines) + "\n", cfg.out, stdout)
    return EXIT_OK


def cmd_witness(cfg: RunConfig, stdout) -> int:
    seed = _require(cfg.seed, "--seed", "witness")
    s = parse_substructure(_require(cfg.structure, "--structure", "witness"), cfg.mode)
    h = cfg.hops if cfg.hops is not None else 2
    w = find_noncount_witness(s, budget=cfg.budget, seed=seed, h=h)
    if w is None:
        stdout.write(f"NO WITNESS for {s.name} within budget\n")
        return EXIT_OK
    stdout.write(
        f"WITNESS {s.name}: tuple {list(w.tuple_a)} count {w.count_a} vs tuple {list(w.tuple_b)} "
        f"count {w.count_b} after {w.graphs_tried} graphs\n"
    )
    if cfg.out:
        os.makedirs(cfg.out, exist_ok=True)
        write_atomic(os.path.join(cfg.out, "witness_a.txt"), to_edge_list(w.graph_a))
        write_atomic(os.path.join(cfg.out, "witness_b.txt"), to_edge_list(w.graph_b))
        meta = {
            "structure": s.name,
            "hops": h,
            "tuple_a": list(w.tuple_a),
            "count_a": w.count_a,
            "tuple_b": list(w.tuple_b),
            "count_b": w.count_b,
            "encoding": w.encoding.to_record(),
        }
        write_atomic(os.path.join(cfg.out, "witness.json"), json.dumps(meta, sort_keys=True, indent=1) + "\n")
    return EXIT_OK


COMMANDS = {
    "encode": cmd_encode,
    "count": cmd_count,
    "wl": cmd_wl,
    "esc": cmd_esc,
    "cfi": cmd_cfi,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "witness": cmd_witness,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="escgraph", description="Structural encodings, substructure counting and WL tests.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, hops=False, seed=False):
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--budget", type=int, help="work budget")
        if hops:
            p.add_argument("--hops", type=int, help="hop parameter h")
        if seed:
            p.add_argument("--seed", type=int, help="random seed")

    p = sub.add_parser("encode", help="export structural encodings of every rooted tuple")
    p.add_argument("graph")
    common(p, hops=True)
    p.add_argument("--tuples", choices=["nodes", "edges", "all-pairs"], default="edges")
    p.add_argument("--distance", choices=["spd", "resistance", "both"], default="spd")

    p = sub.add_parser("count", help="count a substructure")
    p.add_argument("graph")
    common(p, hops=True)
    p.add_argument("--structure", required=True, help="NAME[:L], e.g. cycle:4 or 4-clique")
    p.add_argument("--mode", choices=["subgraph", "induced"], default="subgraph")
    p.add_argument("--engine", choices=["oracle", "closed-form", "both"], default="oracle")

    p = sub.add_parser("wl", help="k-WL distinguishability of two graphs")
    p.add_argument("graphs", nargs="+")
    common(p)
    p.add_argument("--k", type=int, default=1)

    p = sub.add_parser("esc", help="ESC refinement distinguishability of two graphs")
    p.add_argument("graphs", nargs="+")
    common(p, hops=True)
    p.add_argument("--mp", choices=["on", "off"], default="on")
    p.add_argument("--tuples", choices=["nodes", "edges"], default="edges")

    p = sub.add_parser("cfi", help="write a CFI graph")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)

    p = sub.add_parser("gen", help="random counting corpus with oracle per-node labels")
    common(p, seed=True)
    p.add_argument("--n-graphs", type=int, default=10)
    p.add_argument("--min-nodes", type=int, default=10)
    p.add_argument("--max-nodes", type=int, default=20)

    p = sub.add_parser("bench", help="preprocessing and per-round refinement timings")
    common(p, hops=True, seed=True)
    p.add_argument("--sizes", type=_int_list, default=[100, 200, 400])
    p.add_argument("--degree", type=float, default=10.0)
    p.add_argument("--rounds", type=int, default=3)
    p.add_argument("--repeats", type=int, default=5)

    p = sub.add_parser("witness", help="search for encoding-equal contexts with different counts")
    common(p, hops=True, seed=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--mode", choices=["subgraph", "induced"], default="subgraph")
    return parser


_EXTRA = {
    "gen": ("n_graphs", "min_nodes", "max_nodes"),
    "bench": ("sizes", "degree", "rounds", "repeats"),
}


def resolve(args: argparse.Namespace) -> RunConfig:
    ns = vars(args)
    inputs = ns.get("graphs") or ([ns["graph"]] if ns.get("graph") else [])
    budget = ns.get("budget")
    if budget is None:
        budget = {"count": DEFAULT_BUDGET, "wl": DEFAULT_TUPLE_BUDGET, "witness": 20_000}.get(args.command)
    return RunConfig(
        command=args.command,
        inputs=list(inputs),
        hops=ns.get("hops") if ns.get("hops") is not None or args.command != "witness" else 2,
        tuples=ns.get("tuples"),
        distance=ns.get("distance"),
        structure=ns.get("structure"),
        mode=ns.get("mode"),
        engine=ns.get("engine"),
        k=ns.get("k"),
        ell=ns.get("ell"),
        mp=ns.get("mp"),
        seed=ns.get("seed"),
        budget=budget,
        out=ns.get("out"),
        extra={key: ns[key] for key in _EXTRA.get(args.command, ())},
    )


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve(args)
        if cfg.hops is not None and cfg.hops < 0:
            raise ArgumentError("--hops must be >= 0")
        stdout.write(cfg.echo() + "\n")
        return COMMANDS[cfg.command](cfg, stdout)
    except EscError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
