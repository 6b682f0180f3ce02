"""Command-line front end.

Exit codes: 0 success (every verdict held or was skipped), 1 usage or input
error, 2 some verdict refuted, 3 some verdict inconclusive and none refuted.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import os
import sys
from pathlib import Path

from ._backend import BACKEND
from .canon import CORPUS_ORDER_CAP, canonical_labeling, generate_nonisomorphic, is_isomorphic
from .cliques import Decision, clique_graph, enumerate_cliques, is_clique_helly
from .dynamics import Bounds, Converged, classify, is_k_root, iterate_k
from .errors import CliqueLabError
from .formats import emit_dot, emit_graph6, iter_graph6_lines, parse_graph6, write_graph6_file
from .graph import Graph, cartesian_product, is_connected, join
from .lab import CheckConfig, ConjectureId, CorpusSpec, RandomPairs, check, sweep
from .lab.verdict import exit_code

EXIT_OK, EXIT_USAGE, EXIT_REFUTED, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; 2 means "refuted" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    d = Bounds()
    g = p.add_argument_group("bounds and output")
    g.add_argument("--max-steps", type=_positive, default=d.max_steps)
    g.add_argument("--max-vertices", type=_positive, default=d.max_vertices)
    env_cap = os.environ.get("CLIQUELAB_MAX_CLIQUES")
    g.add_argument("--max-cliques", type=_positive, default=int(env_cap) if env_cap else d.max_cliques)
    g.add_argument("--helly-cap", type=_positive, default=CheckConfig().helly_cap)
    g.add_argument("--seed", type=int, default=0)
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--dot", action="store_true", help="DOT output for commands that produce a graph")
    g.add_argument("--no-timestamp", action="store_true", help="omit runtimes and timestamps")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="cliquelab", description="Clique graphs, their iterates and checks of join/product claims.")
    parser.add_argument("--version", action="version", version=f"cliquelab 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, inputs=("in",)):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        for key in inputs:
            sp.add_argument(f"--{key}", required=True, metavar="GRAPH",
                            help="graph6 file (or '-' for stdin) or a literal graph6 string")
        return sp

    add("cliques", "list the maximal cliques")
    sp = add("kgraph", "clique graph K(G), or K^k(G) with --power")
    sp.add_argument("--power", type=_nonnegative, default=1)
    sp = add("iterate", "trace K^0(G), K^1(G), ... until a repeat or a bound")
    sp.add_argument("--dump-dir", help="write each iterate as <dir>/step_<i>.g6")
    add("classify", "K-convergence classification under bounds")
    add("helly", "Clique-Helly test")
    add("join", "join of two graphs", inputs=("g1", "g2"))
    add("product", "Cartesian product of two graphs", inputs=("g1", "g2"))
    add("root-check", "is K(root) isomorphic to target?", inputs=("root", "target"))
    add("iso", "isomorphism test", inputs=("g1", "g2"))
    add("canon", "canonical form and labeling")

    sp = sub.add_parser("gen", parents=[common], help="all non-isomorphic graphs of one order")
    sp.add_argument("--order", type=_positive, required=True)
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.add_argument("--connected", action="store_true")

    tags = [t.value for t in ConjectureId]
    sp = add("check", "check one conjecture on one pair", inputs=("g1", "g2"))
    sp.add_argument("--conjecture", required=True, choices=tags)

    sp = sub.add_parser("sweep", parents=[common], help="check one conjecture over a corpus of pairs")
    sp.add_argument("--conjecture", required=True, choices=tags)
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--orders", nargs=2, type=_positive, metavar=("MIN", "MAX"), default=[1, 4])
    src.add_argument("--corpus", help="graph6 corpus file")
    src.add_argument("--random-pairs", type=_positive, metavar="N",
                     help="N seeded random pairs with orders in --random-orders")
    sp.add_argument("--random-orders", nargs=2, type=_positive, metavar=("MIN", "MAX"), default=[5, 6])
    sp.add_argument("--connected", action="store_true", help="keep connected graphs only")
    sp.add_argument("--clique-helly", action="store_true", help="keep Clique-Helly graphs only")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--summary", action="store_true", help="omit per-instance verdicts from JSON output")
    return parser


# ---------------------------------------------------------------------------
# input and output helpers


def _load_graphs(spec: str) -> list[Graph]:
    if spec == "-":
        return list(iter_graph6_lines(sys.stdin.buffer))
    p = Path(spec)
    if p.exists():
        try:
            with open(p, "rb") as fh:
                graphs = list(iter_graph6_lines(fh))
        except OSError as exc:
            raise UsageError(f"cannot read {spec}: {exc}") from None
        if not graphs:
            raise UsageError(f"{spec} contains no graphs")
        return graphs
    stripped = spec.strip()
    if stripped and all(63 <= ord(c) <= 126 for c in stripped):
        return [parse_graph6(stripped)]
    raise UsageError(f"{spec!r} is neither a readable file nor a graph6 string")


def _load_one(spec: str, name: str) -> Graph:
    graphs = _load_graphs(spec)
    if len(graphs) != 1:
        raise UsageError(f"--{name} must hold exactly one graph, found {len(graphs)}")
    return graphs[0]


def _g6(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


def _bounds(args) -> Bounds:
    return Bounds(args.max_steps, args.max_vertices, args.max_cliques)


def _config(args) -> CheckConfig:
    return CheckConfig(bounds=_bounds(args), helly_cap=args.helly_cap)


def _dump_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _stamp(obj: dict, args) -> dict:
    if not args.no_timestamp:
        obj["generated_at"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return obj


def _emit_results(results: list, args, out) -> None:
    if args.json:
        _dump_json(results[0] if len(results) == 1 else results, out)


def _no_dot(args, command: str) -> None:
    if args.dot:
        raise UsageError(f"--dot is not supported by {command}")


def _graph_output(g: Graph, args, out, extra: dict | None = None) -> None:
    if args.dot:
        out.write(emit_dot(g))
    elif args.json:
        _dump_json({"graph6": _g6(g), "order": g.order, "size": g.size, **(extra or {})}, out)
    else:
        out.write(_g6(g) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_cliques(args, out) -> int:
    _no_dot(args, "cliques")
    results = []
    graphs = _load_graphs(args.__dict__["in"])
    for k, g in enumerate(graphs):
        fam = enumerate_cliques(g, args.max_cliques)
        if args.json:
            results.append({"graph6": _g6(g), "count": len(fam), "cliques": [list(c) for c in fam]})
        else:
            if k:
                out.write("\n")
            for c in fam:
                out.write(" ".join(map(str, c)) + "\n")
    _emit_results(results, args, out)
    return EXIT_OK


def cmd_kgraph(args, out) -> int:
    g = _load_one(args.__dict__["in"], "in")
    b = _bounds(args)
    current, orders, family = g, [g.order], None
    for _ in range(args.power):
        current, family = clique_graph(current, cap=b.clique_limit)
        orders.append(current.order)
    extra = {"power": args.power, "orders": orders}
    if family is not None:
        extra["cliques"] = [list(c) for c in family]
    if args.dot and family is not None:
        out.write(emit_dot(current, labels=["{" + ",".join(map(str, c)) + "}" for c in family], name="K"))
        return EXIT_OK
    _graph_output(current, args, out, extra)
    return EXIT_OK


def cmd_iterate(args, out) -> int:
    _no_dot(args, "iterate")
    g = _load_one(args.__dict__["in"], "in")
    trace = iterate_k(g, _bounds(args), keep_graphs=args.dump_dir is not None)
    if args.dump_dir:
        d = Path(args.dump_dir)
        d.mkdir(parents=True, exist_ok=True)
        for s in trace.steps:
            write_graph6_file(d / f"step_{s.index}.g6", [s.graph])
    if trace.repeat_of is not None:
        last = trace.steps[-1].index
        outcome = {"outcome": "converged", "preperiod": trace.repeat_of, "period": last - trace.repeat_of}
    else:
        outcome = {"outcome": "bound_exceeded", "last_index": trace.steps[-1].index, "reason": trace.reason}
    if args.json:
        _dump_json({"graph6": _g6(g), **outcome, "trace": [s.to_dict() for s in trace.steps]}, out)
    else:
        for s in trace.steps:
            cliques = "-" if s.clique_count is None else s.clique_count
            code = s.code.hexdigest()[:16] if s.code is not None else "-"
            out.write(f"{s.index}\t{s.vertex_count}\t{cliques}\t{code}\n")
        out.write(" ".join(f"{k}={v}" for k, v in outcome.items()) + "\n")
    return EXIT_OK


def cmd_classify(args, out) -> int:
    _no_dot(args, "classify")
    results = []
    for g in _load_graphs(args.__dict__["in"]):
        c = classify(g, _bounds(args))
        if isinstance(c, Converged):
            summary = {"outcome": "converged", "preperiod": c.preperiod, "period": c.period}
            text = f"Converged preperiod={c.preperiod} period={c.period}"
        else:
            summary = {"outcome": "bound_exceeded", "last_index": c.last_index, "reason": c.reason}
            text = f"BoundExceeded last_index={c.last_index} reason={c.reason}"
        summary["orders"] = c.trace.vertex_counts
        results.append({"graph6": _g6(g), **summary})
        if not args.json:
            out.write(f"{_g6(g)}\t{text}\torders={c.trace.vertex_counts}\n")
    _emit_results(results, args, out)
    return EXIT_OK


def cmd_helly(args, out) -> int:
    _no_dot(args, "helly")
    results = []
    for g in _load_graphs(args.__dict__["in"]):
        r = is_clique_helly(g, args.helly_cap)
        item = {"graph6": _g6(g), "clique_helly": r.decision.value, "cliques": len(r.family)}
        if r.decision is Decision.FALSE:
            item["witness"] = [list(r.family[i]) for i in r.witness]
            item["core"] = [list(r.family[i]) for i in r.core]
        if r.reason:
            item["reason"] = r.reason
        results.append(item)
        if not args.json:
            line = f"{_g6(g)}\t{r.decision.value}"
            if "witness" in item:
                line += "\twitness=" + " | ".join(" ".join(map(str, c)) for c in item["witness"])
            if r.reason:
                line += f"\t{r.reason}"
            out.write(line + "\n")
    _emit_results(results, args, out)
    return EXIT_OK


def cmd_join(args, out) -> int:
    _graph_output(join(_load_one(args.g1, "g1"), _load_one(args.g2, "g2")), args, out)
    return EXIT_OK


def cmd_product(args, out) -> int:
    _graph_output(cartesian_product(_load_one(args.g1, "g1"), _load_one(args.g2, "g2")), args, out)
    return EXIT_OK


def cmd_root_check(args, out) -> int:
    _no_dot(args, "root-check")
    h, g = _load_one(args.root, "root"), _load_one(args.target, "target")
    ok = is_k_root(h, g)
    if args.json:
        _dump_json({"root": _g6(h), "target": _g6(g), "is_k_root": ok}, out)
    else:
        out.write(f"{'true' if ok else 'false'}\n")
    return EXIT_OK


def cmd_iso(args, out) -> int:
    _no_dot(args, "iso")
    g1, g2 = _load_one(args.g1, "g1"), _load_one(args.g2, "g2")
    ok = is_isomorphic(g1, g2)
    if args.json:
        _dump_json({"g1": _g6(g1), "g2": _g6(g2), "isomorphic": ok}, out)
    else:
        out.write(f"{'true' if ok else 'false'}\n")
    return EXIT_OK


def cmd_canon(args, out) -> int:
    results = []
    graphs = _load_graphs(args.__dict__["in"])
    if args.dot and len(graphs) != 1:
        raise UsageError("--dot needs exactly one input graph")
    for g in graphs:
        lab, code = canonical_labeling(g)
        canon = parse_graph6(code.bytes)
        if args.dot:
            out.write(emit_dot(canon))
        elif args.json:
            results.append({"graph6": _g6(g), "canonical": str(code), "labeling": lab, "code_hash": code.hexdigest()})
        else:
            out.write(f"{code}\n")
    _emit_results(results, args, out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    _no_dot(args, "gen")
    if args.order > CORPUS_ORDER_CAP:
        raise UsageError(f"--order is capped at {CORPUS_ORDER_CAP}")
    graphs = generate_nonisomorphic(args.order)
    if args.connected:
        graphs = [g for g in graphs if is_connected(g)]
    if args.out:
        try:
            count = write_graph6_file(args.out, graphs)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
        if args.json:
            _dump_json({"order": args.order, "count": count, "out": args.out}, out)
        else:
            out.write(f"{count}\n")
    else:
        for g in graphs:
            out.write(_g6(g) + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    _no_dot(args, "check")
    g1, g2 = _load_one(args.g1, "g1"), _load_one(args.g2, "g2")
    verdict = check(args.conjecture, g1, g2, _config(args))
    if args.json:
        _dump_json(_stamp(verdict.to_dict(timestamps=not args.no_timestamp), args), out)
    else:
        out.write(f"{verdict.conjecture.value} {_g6(g1)} {_g6(g2)}: {verdict.outcome.value}\n")
        if verdict.reason:
            out.write(f"  reason: {verdict.reason}\n")
        if verdict.witness is not None:
            out.write(f"  witness: {json.dumps(verdict.witness)}\n")
        out.write(f"  measured: {json.dumps(verdict.measured)}\n")
    return exit_code([verdict.outcome])


def cmd_sweep(args, out) -> int:
    _no_dot(args, "sweep")
    if args.random_pairs:
        lo, hi = args.random_orders
        if lo > hi:
            raise UsageError("--random-orders MIN exceeds MAX")
        corpus = RandomPairs(args.random_pairs, lo, hi, args.seed)
    else:
        lo, hi = args.orders
        if lo > hi:
            raise UsageError("--orders MIN exceeds MAX")
        if args.corpus is None and hi > CORPUS_ORDER_CAP:
            raise UsageError(f"corpus orders are capped at {CORPUS_ORDER_CAP}")
        if args.corpus is not None and not os.path.exists(args.corpus):
            raise UsageError(f"cannot read {args.corpus}")
        corpus = CorpusSpec(lo, hi, args.corpus, args.connected, args.clique_helly)
    report = sweep(args.conjecture, corpus, _config(args), jobs=args.jobs)
    if args.json:
        data = report.to_dict(timestamps=not args.no_timestamp)
        if args.summary:
            del data["verdicts"]
        _dump_json(_stamp(data, args), out)
    else:
        t = report.tallies
        out.write(f"{report.conjecture.value}: {report.instances} instances; "
                  + ", ".join(f"{k} {v}" for k, v in t.items()) + "\n")
        for v in report.verdicts:
            if v.outcome.value in ("refuted", "inconclusive"):
                detail = json.dumps(v.witness) if v.witness is not None else (v.reason or "")
                out.write(f"  {v.outcome.value} {_g6(v.g1)} {_g6(v.g2)} {detail}\n")
    return report.exit_code


COMMANDS = {
    "cliques": cmd_cliques,
    "kgraph": cmd_kgraph,
    "iterate": cmd_iterate,
    "classify": cmd_classify,
    "helly": cmd_helly,
    "join": cmd_join,
    "product": cmd_product,
    "root-check": cmd_root_check,
    "iso": cmd_iso,
    "canon": cmd_canon,
    "gen": cmd_gen,
    "check": cmd_check,
    "sweep": cmd_sweep,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, CliqueLabError, ValueError, OSError) as exc:
        err.write(f"cliquelab {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
