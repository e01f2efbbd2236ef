"""Command line front end.

stdout carries line-delimited JSON (or DOT for graph exports) and
nothing else; diagnostics and progress go to stderr.  Exit codes:
0 success, 1 domain error, 2 usage error, 3 engine disagreement.
The P3_BUDGET environment variable overrides position budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .bitsets import mask_of, vertices_of
from .claims import CLAIM_IDS, run_all_claims, run_claim, summary_table
from .convexity import closure_after_move, is_convex
from .families import FAMILIES, FamilySpec, generate
from .game import (GameSolver, GameVariant, MoveEval, build_game_graph,
                   verify_labels)
from .graph import Graph, GraphError, parse_graph, serialize_graph, within_two_mask
from .solver import FastSolver, grundy_fast

SCHEMA = "p3report-v1"

VARIANTS = {
    "ordinary": GameVariant.ORDINARY,
    "augmented": GameVariant.AUGMENTED_NORMAL_PLAY,
    "augmented-arcv": GameVariant.AUGMENTED_ARC_TO_V,
}


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _fail(message: str, code: int = 1) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read graph file {path}: {exc}") from None


def _parse_playground(g: Graph, text: Optional[str]) -> int:
    if not text:
        return 0
    try:
        verts = [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise GraphError(f"playground must be a comma list of integers, got {text!r}") from None
    for v in verts:
        if not (0 <= v < g.n):
            raise GraphError(f"playground vertex {v} out of range 0..{g.n - 1}")
    m = mask_of(verts)
    if not g.is_connected(m) and m:
        raise GraphError("playground is not convex: induced subgraph is disconnected")
    if not is_convex(g, m):
        raise GraphError("playground is not convex: an outside vertex has two neighbors in it")
    return m


def _budget() -> Optional[int]:
    raw = os.environ.get("P3_BUDGET")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"P3_BUDGET must be an integer, got {raw!r}") from None


def _solve_payload(g: Graph, u: int, engine: str, with_moves: bool) -> dict:
    budget = _budget()
    payload: dict = {"schema": SCHEMA, "engine": engine,
                     "n": g.n, "playground": list(vertices_of(u))}
    if engine == "oracle":
        solver = GameSolver(g, node_budget=budget)
        value, _winner, evals = solver.analyze(u)
        payload["stats"] = {"positions": solver.positions_seen}
    else:
        fast = FastSolver(g, position_budget=budget)
        value = fast.grundy(u)
        # per-move values come from the same memoized solver
        cand = g.full_mask if u == 0 else (within_two_mask(g, u, g.full_mask) & ~u)
        evals = []
        for x in vertices_of(cand):
            after = closure_after_move(g, u, x, g.full_mask)
            va = fast.grundy(after)
            evals.append(MoveEval(x, after, va, va == 0))
        st = fast.stats
        payload["stats"] = {"positions": st.positions, "decompositions": st.decompositions,
                            "memoEntries": st.memo_entries, "ms": round(st.ms, 3)}
    payload["grundy"] = value
    payload["winner"] = "first" if value != 0 else "second"
    payload["bestMoves"] = sorted(e.vertex for e in evals if e.winning)
    if with_moves:
        payload["moves"] = [
            {"vertex": e.vertex, "playground": list(vertices_of(e.playground_after)),
             "grundy": e.grundy_after, "winning": e.winning}
            for e in evals
        ]
    return payload


def _cmd_solve(args, with_moves: bool) -> int:
    g = _read_graph(args.graph)
    u = _parse_playground(g, args.playground)
    if args.engine in ("oracle", "fast"):
        _emit(_solve_payload(g, u, args.engine, with_moves))
        return 0
    oracle = _solve_payload(g, u, "oracle", with_moves)
    fast = _solve_payload(g, u, "fast", with_moves)
    if oracle["grundy"] != fast["grundy"]:
        _emit(oracle)
        _emit(fast)
        print("error: engines disagree", file=sys.stderr)
        return 3
    merged = dict(fast)
    merged["engine"] = "both"
    merged["oracleStats"] = oracle["stats"]
    _emit(merged)
    return 0


def _cmd_gen(args) -> int:
    spec = FamilySpec(args.family, tuple(args.params), seed=args.seed)
    g = generate(spec)
    sys.stdout.write(serialize_graph(g))
    return 0


def _cmd_enumerate(args) -> int:
    from .families import enumerate_chordal_bipartite, enumerate_connected_graphs
    if args.what == "chordal-bipartite":
        graphs = list(enumerate_chordal_bipartite(args.n))
    else:
        graphs = list(enumerate_connected_graphs(args.n))
    for g in graphs:
        _emit({"n": g.n, "edges": [list(e) for e in sorted(g.edges())]})
    return 0


def _cmd_gamegraph(args) -> int:
    g = _read_graph(args.graph)
    u = _parse_playground(g, args.playground)
    gg = build_game_graph(g, u, VARIANTS[args.variant],
                          node_budget=_budget() or 200_000)
    if args.dot:
        print(gg.to_dot())
    else:
        _emit(gg.to_json_dict())
    return 0


CORPORA = {"standard": None, "desk": 6, "smoke": 4}


def _cmd_claims(args) -> int:
    max_n = CORPORA[args.corpus] if args.max_n is None else args.max_n
    if args.claim:
        reports = [run_claim(cid, max_n=max_n) for cid in args.claim]
    else:
        reports = run_all_claims(max_n=max_n)
    payload = [r.to_json_dict() for r in reports]
    for item in payload:
        _emit(item)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"schema": SCHEMA, "claims": payload}, fh, indent=2, sort_keys=True)
    print(summary_table(reports), file=sys.stderr)
    return 1 if any(r.regression for r in reports) else 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


SELFTEST_VECTORS = [
    # (name, graph text, playground, expected grundy, expected winning moves or None)
    ("single-vertex", '{"format":"p3graph-v1","n":1,"edges":[]}', "", 1, [0]),
    ("edge", "0 1", "", 0, []),
    ("path3", "0 1\n1 2", "", 1, [1]),
    ("path4", "0 1\n1 2\n2 3", "", 1, [0, 3]),
    ("cycle4", "0 1\n1 2\n2 3\n0 3", "", 0, []),
    ("path4-from-bc", "0 1\n1 2\n2 3", "1,2", 0, []),
]


def _cmd_selftest(_args) -> int:
    failures = 0
    for name, text, pg, want_value, want_moves in SELFTEST_VECTORS:
        g = parse_graph(text)
        u = _parse_playground(g, pg)
        solver = GameSolver(g)
        value, _winner, evals = solver.analyze(u)
        fast_value, _stats = grundy_fast(g, u)
        winning = sorted(e.vertex for e in evals if e.winning)
        ok = (value == want_value and fast_value == want_value
              and (want_moves is None or winning == want_moves))
        gg = build_game_graph(g, u)
        ok = ok and verify_labels(gg) and gg.labels[gg.root] == want_value
        _emit({"check": name, "pass": ok, "grundy": value,
               "winning": winning})
        if not ok:
            failures += 1
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="p3game",
                                 description="P3 vertex game workbench")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add_graph_opts(p):
        p.add_argument("--graph", required=True,
                       help="graph file (edge list or p3graph-v1 JSON); '-' reads stdin")
        p.add_argument("--playground", default="",
                       help="comma list of starting playground vertices")

    p_solve = sub.add_parser("solve", help="grundy value, winner, best first moves")
    add_graph_opts(p_solve)
    p_solve.add_argument("--engine", choices=["oracle", "fast", "both"], default="fast")

    p_analyze = sub.add_parser("analyze", help="solve plus per-move evaluations")
    add_graph_opts(p_analyze)
    p_analyze.add_argument("--engine", choices=["oracle", "fast", "both"], default="fast")

    p_gen = sub.add_parser("gen", help="emit a family graph as edge-list text")
    p_gen.add_argument("family", choices=sorted(FAMILIES))
    p_gen.add_argument("params", nargs="*", type=int)
    p_gen.add_argument("--seed", type=int, default=0)

    p_enum = sub.add_parser("enumerate", help="stream small-graph corpora as JSON lines")
    p_enum.add_argument("--what", choices=["chordal-bipartite", "connected"],
                        default="chordal-bipartite")
    p_enum.add_argument("--n", type=int, required=True)

    p_gg = sub.add_parser("gamegraph", help="export the labeled game DAG")
    add_graph_opts(p_gg)
    p_gg.add_argument("--variant", choices=sorted(VARIANTS), default="ordinary")
    fmt = p_gg.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    p_claims = sub.add_parser("claims", help="run the claim checker")
    claims_sub = p_claims.add_subparsers(dest="claims_verb", required=True)
    p_run = claims_sub.add_parser("run")
    p_run.add_argument("--claim", action="append", choices=CLAIM_IDS,
                       help="claim id; repeatable; default all")
    p_run.add_argument("--corpus", choices=sorted(CORPORA), default="standard",
                       help="named corpus scale (standard, desk, smoke)")
    p_run.add_argument("--max-n", type=int, default=None,
                       help="override: shrink corpora to this vertex/rung bound")
    p_run.add_argument("--out", help="write the full JSON report here")

    p_serve = sub.add_parser("serve", help="start the HTTP play service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--ui", default=None,
                         help="directory with the browser client to host at /")

    sub.add_parser("selftest", help="run the built-in example vectors")
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.verb == "solve":
            return _cmd_solve(args, with_moves=False)
        if args.verb == "analyze":
            return _cmd_solve(args, with_moves=True)
        if args.verb == "gen":
            return _cmd_gen(args)
        if args.verb == "enumerate":
            return _cmd_enumerate(args)
        if args.verb == "gamegraph":
            return _cmd_gamegraph(args)
        if args.verb == "claims":
            return _cmd_claims(args)
        if args.verb == "serve":
            return _cmd_serve(args)
        if args.verb == "selftest":
            return _cmd_selftest(args)
        return _fail(f"unknown verb {args.verb}", 2)
    except GraphError as exc:
        return _fail(str(exc))
    except KeyboardInterrupt:
        return _fail("interrupted")


if __name__ == "__main__":
    sys.exit(main())
