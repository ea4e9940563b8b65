"""Command-line interface.

Graph arguments take one of ``catalog:NAME``, ``g6:STRING``, ``-`` (stdin)
or a file path holding graph6, an edge list or an embedding document.

Exit codes: 0 success, 1 negative answer, 2 input error, 3 a guaranteed
result failed to materialize, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from pathlib import Path
from typing import Any, Callable, Sequence

from . import kernels
from .catalog import catalog, catalog_names
from .colouring import DEFAULT_BUDGET, Colouring, chi_odd_exact, solve_odd_k
from .configurations import claim1_matches, claim2_matches
from .discharging import R1_NEIGHBOUR, counterexample_audit, discharge
from .embedding import RotationSystem, embed_planar
from .errors import BudgetExhausted, GuaranteeViolated, MalformedInputError, NotEmbeddableError
from .formats import (
    GraphDocument,
    dump_edge_list,
    dump_embedding,
    parse_document,
    parse_embedding_doc,
    to_graph6,
)
from .generate import gen_near_triangulation, gen_random_planar
from .graph import Graph
from .pipeline import ReductionTrace, odd_colour_planar_8
from .report import (
    audit_payload,
    build_report,
    colouring_payload,
    discharge_payload,
    match_payload,
    render_json,
    verify_payload,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CONTRADICTION = 3
EXIT_BUDGET = 4


@dataclasses.dataclass
class Outcome:
    code: int
    result: dict[str, Any]
    text: str


@dataclasses.dataclass
class LoadedInput:
    source: str
    document: GraphDocument
    graph: Graph
    embedding: RotationSystem | None


def load_input(spec: str) -> LoadedInput:
    if spec.startswith("catalog:"):
        doc = catalog(spec[len("catalog:"):])
    elif spec.startswith("g6:"):
        doc = parse_document(spec[3:])
    elif spec == "-":
        doc = parse_document(sys.stdin.read())
    else:
        path = Path(spec)
        if not path.is_file():
            raise MalformedInputError(f"no such file: {spec}")
        doc = parse_document(path.read_text(encoding="ascii"), name=path.name)
    g, rot = doc.load()
    return LoadedInput(spec, doc, g, rot)


def _parse_colouring(text: str, g: Graph, k: int | None) -> Colouring:
    tokens = text.replace(",", " ").split()
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise MalformedInputError("colouring must be a list of non-negative integers") from None
    if len(values) != g.capacity:
        raise MalformedInputError(f"colouring has {len(values)} entries, graph has {g.capacity} vertices")
    if any(v < 0 for v in values):
        raise MalformedInputError("colours must be non-negative")
    palette = k if k is not None else (max(values) + 1 if values else 1)
    return Colouring.from_list(palette, values)


def _colouring_text(payload: dict[str, Any]) -> str:
    cols = " ".join("-" if c is None else str(c) for c in payload["colouring"])
    return f"colouring: {cols}\ncolours used: {payload['colours_used']}\nverified: {str(payload['verified']).lower()}"


def _require_embedding(inp: LoadedInput, override: str | None) -> RotationSystem:
    if override is not None:
        g, rot, _ = parse_embedding_doc(Path(override).read_text(encoding="ascii"))
        if g != inp.graph:
            raise MalformedInputError("embedding document does not match the input graph")
        return rot
    if inp.embedding is not None:
        return inp.embedding
    rot = embed_planar(inp.graph)
    if rot is None:
        raise NotEmbeddableError("input graph is not planar")
    return rot


# --------------------------------------------------------------------------
# subcommands


def cmd_verify(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    text = Path(args.colouring_file).read_text() if args.colouring_file else args.colouring
    if text is None:
        raise MalformedInputError("verify needs --colouring or --colouring-file")
    c = _parse_colouring(text, inp.graph, args.colours)
    res = verify_payload(inp.graph, c)
    ok = res["odd_colouring"]
    return Outcome(EXIT_OK if ok else EXIT_NEGATIVE, res, f"odd colouring: {str(ok).lower()}")


def cmd_solve(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    c = solve_odd_k(inp.graph, args.colours, args.budget)
    if c is None:
        res = {"colours": args.colours, "found": False, "backend": kernels.BACKEND}
        return Outcome(EXIT_NEGATIVE, res, f"no odd {args.colours}-colouring")
    payload = colouring_payload(inp.graph, c)
    res = {"colours": args.colours, "found": True, "backend": kernels.BACKEND, **payload}
    code = EXIT_OK if payload["verified"] else EXIT_CONTRADICTION
    return Outcome(code, res, _colouring_text(payload))


def cmd_chi_odd(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    chi = chi_odd_exact(inp.graph, args.budget)
    res: dict[str, Any] = {"chi_odd": chi}
    if chi:
        c = solve_odd_k(inp.graph, chi, args.budget)
        assert c is not None
        payload = colouring_payload(inp.graph, c)
        res["witness"] = payload
        if not payload["verified"]:
            return Outcome(EXIT_CONTRADICTION, res, str(chi))
    return Outcome(EXIT_OK, res, str(chi))


def _step_dict(step: Any) -> dict[str, Any]:
    d = dataclasses.asdict(step)
    return {"step": type(step).__name__, **{k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}}


def cmd_colour8(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    trace = ReductionTrace()
    c = odd_colour_planar_8(inp.graph, trace, check_planar=True)
    payload = colouring_payload(inp.graph, c)
    res: dict[str, Any] = {**payload, "trace_length": len(trace)}
    if args.trace:
        res["trace"] = [_step_dict(s) for s in trace]
    code = EXIT_OK if payload["verified"] and payload["colours_used"] <= 8 else EXIT_CONTRADICTION
    return Outcome(code, res, _colouring_text(payload))


def cmd_discharge(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    rot = _require_embedding(inp, args.embedding)
    res = discharge(inp.graph, rot, args.r1)
    payload = discharge_payload(inp.graph, res, args.r1)
    text = "\n".join([
        f"total before: {payload['total_before_units']}",
        f"total after: {payload['total_after_units']}",
        f"claim 3 violations: {len(res.claim3)}",
        f"claim 4 violations: {len(res.claim4)}",
        f"negative 4-vertices: {' '.join(map(str, res.negative_four_vertices)) or '-'}",
    ])
    if res.before.total() != res.after.total() or res.before.total() != -48:
        return Outcome(EXIT_CONTRADICTION, payload, text)
    return Outcome(EXIT_NEGATIVE if res.claim3 or res.claim4 else EXIT_OK, payload, text)


def cmd_audit(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    rot = _require_embedding(inp, args.embedding)
    rep = counterexample_audit(inp.graph, rot, args.r1)
    payload = audit_payload(rep)
    code = EXIT_OK
    if rep.degree_audit_passed and (not rep.has_match or not rep.negative):
        code = EXIT_CONTRADICTION
    return Outcome(code, payload, rep.explanation)


def cmd_scan(args: argparse.Namespace, inp: LoadedInput) -> Outcome:
    g = inp.graph
    c1 = [match_payload(m) for m in claim1_matches(g)]
    c2 = [match_payload(m) for m in claim2_matches(g)]
    degs = g.degrees().values()
    hypotheses = (
        g.order > 0 and g.is_connected() and all(d % 2 == 0 and d >= 4 for d in degs)
        and embed_planar(g) is not None
    )
    res = {"claim1": c1[: args.limit], "claim2": c2[: args.limit],
           "claim1_count": len(c1), "claim2_count": len(c2),
           "guaranteed": hypotheses}
    text = f"claim 1 matches: {len(c1)}\nclaim 2 matches: {len(c2)}"
    if c1 or c2:
        return Outcome(EXIT_OK, res, text)
    return Outcome(EXIT_CONTRADICTION if hypotheses else EXIT_NEGATIVE, res, text)


def _dump(g: Graph, rot: RotationSystem | None, fmt: str, name: str | None) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edges":
        return dump_edge_list(g, name)
    if rot is None:
        raise NotEmbeddableError(f"{name or 'graph'} has no plane embedding")
    return dump_embedding(g, rot, name)


def cmd_gen(args: argparse.Namespace, inp: None) -> Outcome:
    if args.n < 3:
        raise MalformedInputError("--n must be at least 3")
    if args.removals:
        g, rot = gen_near_triangulation(args.n, args.seed, args.removals)
    else:
        g, rot = gen_random_planar(args.n, args.seed)
    name = f"random-{args.n}-{args.seed}" + (f"-r{args.removals}" if args.removals else "")
    text = _dump(g, rot, args.format, name)
    res = {"n": g.order, "edges": g.size, "seed": args.seed, "format": args.format, "document": text}
    return Outcome(EXIT_OK, res, text.rstrip("\n"))


def cmd_catalog(args: argparse.Namespace, inp: None) -> Outcome:
    if args.name is None:
        names = catalog_names()
        return Outcome(EXIT_OK, {"names": names}, "\n".join(names))
    doc = catalog(args.name)
    g, rot = doc.load()
    text = _dump(g, rot, args.format, args.name) if args.format else doc.payload
    res = {"name": args.name, "order": g.order, "edges": g.size, "planar": rot is not None,
           "format": args.format or doc.format, "document": text}
    return Outcome(EXIT_OK, res, text.rstrip("\n"))


# --------------------------------------------------------------------------
# dispatch


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddcolour", description="Odd colourings of graphs.")
    p.add_argument("--json", action="store_true", help="emit a JSON report instead of text")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def graph_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="catalog:NAME, g6:STRING, '-' or a file")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    sp = graph_cmd("verify", "check a colouring")
    sp.add_argument("--colouring", help="colours by vertex id, comma or space separated")
    sp.add_argument("--colouring-file")
    sp.add_argument("--colours", type=int, help="palette size (default: max colour + 1)")

    sp = graph_cmd("solve", "find an odd k-colouring")
    sp.add_argument("--colours", "-k", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = graph_cmd("chi-odd", "odd chromatic number")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = graph_cmd("colour8", "odd 8-colouring of a planar graph")
    sp.add_argument("--trace", action="store_true", help="include the reduction steps")

    for name, help_ in (("discharge", "run the discharging rules"), ("audit", "minimal-counterexample audit")):
        sp = graph_cmd(name, help_)
        sp.add_argument("--embedding", help="embedding document to use instead of the input's")
        sp.add_argument("--r1", choices=("next", "previous"), default=R1_NEIGHBOUR)

    sp = graph_cmd("scan", "find reducible configurations")
    sp.add_argument("--limit", type=int, default=20, help="matches listed per kind")

    sp = sub.add_parser("gen", help="seeded random plane triangulation")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--removals", type=int, default=0, help="delete this many edges afterwards")
    sp.add_argument("--format", choices=("embedding", "graph6", "edges"), default="embedding")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("catalog", help="list or print catalog graphs")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--format", choices=("embedding", "graph6", "edges"))
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    return p


_COMMANDS: dict[str, Callable[..., Outcome]] = {
    "verify": cmd_verify,
    "solve": cmd_solve,
    "chi-odd": cmd_chi_odd,
    "colour8": cmd_colour8,
    "discharge": cmd_discharge,
    "audit": cmd_audit,
    "scan": cmd_scan,
    "gen": cmd_gen,
    "catalog": cmd_catalog,
}


def dispatch(argv: Sequence[str]) -> tuple[int, dict[str, Any] | None, str]:
    """Run one command; returns ``(exit code, report or None, text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), None, ""
    start = time.perf_counter()
    source = payload = None
    try:
        inp = None
        if hasattr(args, "graph"):
            inp = load_input(args.graph)
            source, payload = inp.source, inp.document.payload
        out = _COMMANDS[args.command](args, inp)
    except (MalformedInputError, NotEmbeddableError, OSError, UnicodeDecodeError) as exc:
        out = Outcome(EXIT_INPUT, {"error": "input", "message": str(exc)}, f"error: {exc}")
    except GuaranteeViolated as exc:
        out = Outcome(EXIT_CONTRADICTION, {"error": "guarantee-violated", "message": str(exc)}, f"error: {exc}")
    except BudgetExhausted as exc:
        out = Outcome(EXIT_BUDGET, {"error": "budget", "message": str(exc), "nodes": exc.nodes}, f"error: {exc}")
    report = build_report(args.command, source, payload, out.result, out.code, time.perf_counter() - start)
    return out.code, report, render_json(report) if args.json else out.text + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, _, text = dispatch(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == EXIT_INPUT and text.startswith("error:") else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
