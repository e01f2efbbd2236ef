"""Session-based HTTP API for interactive play against the engine.

JSON over HTTP, in-memory sessions with an LRU cap.  Game legality and
closures are decided exclusively here; clients render state and relay
clicks.  Move evaluations are computed lazily under a per-session time
budget and degrade to unknown rather than blocking play.
"""

from __future__ import annotations

import secrets
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .bitsets import bit, vertices_of
from .convexity import closure_after_move, is_convex
from .families import FAMILIES, FamilySpec, generate, is_chordal_bipartite
from .game import FIRST, SECOND, GameSolver, SolveBudgetError
from .graph import Graph, GraphError, ParseError, graph_to_json_dict, parse_graph, within_two_mask
from .solver import FastSolver


class ApiError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message
        super().__init__(message)


@dataclass
class Session:
    id: str
    graph: Graph
    engine_kind: str                  # "oracle" | "fast"
    human_side: str                   # FIRST | SECOND
    playground: int = 0
    to_move: str = FIRST
    finished: bool = False
    loser: Optional[str] = None
    history: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    eval_budget_s: float = 2.0
    _solver: Optional[object] = None

    def engine_side(self) -> str:
        return SECOND if self.human_side == FIRST else FIRST

    def state_dict(self) -> dict:
        return {
            "id": self.id,
            "graph": graph_to_json_dict(self.graph),
            "playground": list(vertices_of(self.playground)),
            "toMove": self.to_move,
            "humanSide": self.human_side,
            "engine": self.engine_kind,
            "finished": self.finished,
            "loser": self.loser,
            "history": list(self.history),
            "warnings": list(self.warnings),
        }

    # -- engine plumbing -------------------------------------------------

    def _value(self, playground: int, deadline: float) -> Optional[int]:
        try:
            if self.engine_kind == "oracle":
                if self._solver is None:
                    self._solver = GameSolver(self.graph)
                self._solver.deadline = deadline
                return self._solver.grundy(playground)
            if self._solver is None:
                self._solver = FastSolver(self.graph)
            self._solver.deadline = deadline
            return self._solver.grundy(playground)
        except SolveBudgetError:
            return None

    def legal_vertices(self) -> list[int]:
        g = self.graph
        if self.playground == 0:
            return list(range(g.n))
        cand = within_two_mask(g, self.playground, g.full_mask) & ~self.playground
        return list(vertices_of(cand))

    def move_evals(self) -> list[dict]:
        g = self.graph
        deadline = time.monotonic() + self.eval_budget_s
        out = []
        for x in self.legal_vertices():
            after = closure_after_move(g, self.playground, x, g.full_mask)
            value = self._value(after, deadline)
            out.append({
                "vertex": x,
                "playground": list(vertices_of(after)),
                "grundy": value,
                "winning": None if value is None else (value == 0),
            })
        return out

    def apply(self, vertex: int, side: str) -> None:
        g = self.graph
        if self.finished:
            raise ApiError(409, "game is finished")
        if side != self.to_move:
            raise ApiError(409, f"it is not {side}'s turn")
        if not (0 <= vertex < g.n):
            raise ApiError(400, f"vertex {vertex} out of range 0..{g.n - 1}")
        if self.playground & bit(vertex):
            raise ApiError(400, f"vertex {vertex} is already in the playground")
        if self.playground and not (
                within_two_mask(g, self.playground, g.full_mask) & bit(vertex)):
            raise ApiError(400, f"vertex {vertex} is at distance > 2 from the playground")
        self.playground = closure_after_move(g, self.playground, vertex, g.full_mask)
        assert is_convex(g, self.playground)
        self.history.append({"side": side, "vertex": vertex,
                             "playground": list(vertices_of(self.playground))})
        self.to_move = SECOND if self.to_move == FIRST else FIRST
        if self.playground == g.full_mask:
            self.finished = True
            self.loser = self.to_move

    def engine_move(self) -> int:
        if self.finished:
            raise ApiError(409, "game is finished")
        if self.to_move != self.engine_side():
            raise ApiError(409, "it is not the engine's turn")
        evals = self.move_evals()
        winning = [e["vertex"] for e in evals if e["winning"]]
        chosen = winning[0] if winning else evals[0]["vertex"]
        self.apply(chosen, self.engine_side())
        return chosen


class SessionStore:
    def __init__(self, cap: int = 256):
        self.cap = cap
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, Session] = OrderedDict()

    def put(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            self._sessions.move_to_end(session.id)
            while len(self._sessions) > self.cap:
                self._sessions.popitem(last=False)

    def get(self, sid: str) -> Session:
        with self._lock:
            session = self._sessions.get(sid)
            if session is None:
                raise ApiError(404, f"unknown session {sid}")
            self._sessions.move_to_end(sid)
            return session


ORACLE_VERTEX_CAP = 18
FAST_VERTEX_CAP = 2000


def _build_graph(body: dict) -> tuple[Graph, list[str]]:
    warnings: list[str] = []
    if ("graph" in body) == ("family" in body):
        raise ApiError(400, 'provide exactly one of "graph" or "family"')
    if "graph" in body:
        raw = body["graph"]
        try:
            if isinstance(raw, str):
                g = parse_graph(raw)
            elif isinstance(raw, dict):
                import json as _json
                g = parse_graph(_json.dumps(raw))
            else:
                raise ApiError(400, '"graph" must be a string or a p3graph-v1 object')
        except ParseError as exc:
            raise ApiError(400, f"bad graph: {exc}") from None
    else:
        fam = body["family"]
        if not isinstance(fam, dict) or "name" not in fam:
            raise ApiError(400, '"family" must be {"name": ..., "params": [...], "seed": ...}')
        try:
            spec = FamilySpec(str(fam["name"]),
                              tuple(int(p) for p in fam.get("params", [])),
                              seed=fam.get("seed"))
            g = generate(spec)
        except (GraphError, TypeError, ValueError) as exc:
            raise ApiError(400, f"bad family request: {exc}") from None
    if not g.is_connected():
        raise ApiError(422, "graph is disconnected; the game needs a connected graph")
    if body.get("chordalBipartiteOnly"):
        ok, _w = is_chordal_bipartite(g)
        if not ok:
            warnings.append("graph is not chordal bipartite; the game is still "
                            "well defined on any connected graph")
    return g, warnings


def create_app(ui_dir: Optional[str] = None, session_cap: int = 256,
               eval_budget_s: float = 2.0) -> FastAPI:
    app = FastAPI(title="p3game service")
    store = SessionStore(cap=session_cap)

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.get("/api/families")
    def families():
        return [{"name": name, "params": info["params"], "seeded": info["seeded"],
                 "description": info["doc"]}
                for name, info in sorted(FAMILIES.items())]

    @app.post("/api/games", status_code=201)
    async def create_game(request: Request):
        body = await request.json()
        if not isinstance(body, dict):
            raise ApiError(400, "body must be a JSON object")
        g, warnings = _build_graph(body)
        engine = body.get("engine", "fast")
        if engine not in ("oracle", "fast"):
            raise ApiError(400, 'engine must be "oracle" or "fast"')
        cap = ORACLE_VERTEX_CAP if engine == "oracle" else FAST_VERTEX_CAP
        if g.n > cap:
            raise ApiError(400, f"{engine} engine is capped at {cap} vertices, got {g.n}")
        human = body.get("humanSide", FIRST)
        if human not in (FIRST, SECOND):
            raise ApiError(400, 'humanSide must be "first" or "second"')
        session = Session(id=secrets.token_hex(8), graph=g, engine_kind=engine,
                          human_side=human, warnings=warnings,
                          eval_budget_s=eval_budget_s)
        store.put(session)
        return session.state_dict()

    @app.get("/api/games/{sid}")
    def get_game(sid: str):
        return store.get(sid).state_dict()

    @app.get("/api/games/{sid}/moves")
    def list_moves(sid: str):
        session = store.get(sid)
        with session.lock:
            if session.finished:
                raise ApiError(409, "game is finished")
            return session.move_evals()

    @app.post("/api/games/{sid}/moves")
    async def play_move(sid: str, request: Request):
        body = await request.json()
        if not isinstance(body, dict) or not isinstance(body.get("vertex"), int):
            raise ApiError(400, 'body must be {"vertex": <int>}')
        session = store.get(sid)
        with session.lock:
            session.apply(body["vertex"], session.human_side)
            return session.state_dict()

    @app.post("/api/games/{sid}/engine-move")
    def engine_move(sid: str):
        session = store.get(sid)
        with session.lock:
            vertex = session.engine_move()
            return {"vertex": vertex, "state": session.state_dict()}

    if ui_dir:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
