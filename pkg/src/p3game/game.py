"""Exact game semantics and the exhaustive game-DAG oracle.

The game: two players alternately pick a vertex at distance at most two
from the current playground (any vertex when the playground is empty);
the playground becomes the convex closure of the old playground plus the
pick; whoever is to move when the playground covers every vertex loses.

Positions are playground masks.  Values follow normal-play theory: the
value of a position is the mex of its successors' values, a position is a
first-player win exactly when its value is nonzero.

Three rule variants exist.  ORDINARY is the game above.  The two
augmented variants forbid finishing moves (moves whose closure is the
whole vertex set); they differ in how a stuck position scores: under
AUGMENTED_NORMAL_PLAY the stuck player loses (value 0), under
AUGMENTED_ARC_TO_V every stuck position gets a single artificial arc to
the full-set sink (value mex{0} = 1).  Both are kept deliberately; the
claim checker reports how each relates to the ordinary game.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .bitsets import as_mask, bit, iter_bits, vertices_of
from .convexity import closure_after_move, is_convex
from .graph import Graph, GraphError, within_two_mask


class GameVariant(enum.Enum):
    ORDINARY = "ordinary"
    AUGMENTED_NORMAL_PLAY = "augmented-normal-play"
    AUGMENTED_ARC_TO_V = "augmented-arc-to-v"


class SolveBudgetError(GraphError):
    """A node/position/time budget was exhausted before the solve finished."""


def mex(values: Iterable[int]) -> int:
    s = set(values)
    k = 0
    while k in s:
        k += 1
    return k


def nim_sum(values: Iterable[int]) -> int:
    out = 0
    for v in values:
        out ^= v
    return out


@dataclass(frozen=True)
class MoveEval:
    vertex: int
    playground_after: int
    grundy_after: Optional[int]
    winning: Optional[bool]


FIRST = "first"
SECOND = "second"


class GameSolver:
    """Memoized depth-first value computation over the reachable DAG.

    One instance owns one memo table and is single-threaded; separate
    instances over the same immutable graph may run concurrently.  The
    ``active`` arguments restrict play to an induced subgraph, which is
    how component subgames are evaluated; memo keys pair the subgraph
    mask with the playground mask.
    """

    def __init__(self, g: Graph, variant: GameVariant = GameVariant.ORDINARY,
                 node_budget: Optional[int] = None, deadline: Optional[float] = None):
        if not g.is_connected():
            raise GraphError("the game is defined on connected graphs")
        self.g = g
        self.variant = variant
        self.node_budget = node_budget
        self.deadline = deadline
        self._memo: dict[tuple[int, int], int] = {}

    # -- move generation ------------------------------------------------

    def legal_moves(self, u, active: Optional[int] = None) -> list[int]:
        g = self.g
        act = g.full_mask if active is None else active
        um = as_mask(u, g.n)
        if not is_convex(g, um, act):
            raise GraphError(f"playground {vertices_of(um)} is not convex")
        return self._legal_unchecked(um, act)

    def _legal_unchecked(self, um: int, act: int) -> list[int]:
        if um == 0:
            cand = act
        else:
            cand = within_two_mask(self.g, um, act) & ~um
        if self.variant is GameVariant.ORDINARY:
            return list(iter_bits(cand))
        return [x for x in iter_bits(cand)
                if closure_after_move(self.g, um, x, act) != act]

    def successors(self, u, active: Optional[int] = None) -> tuple[int, ...]:
        """Distinct successor playgrounds, canonically ordered.  Distinct
        moves reaching the same playground collapse to one arc."""
        g = self.g
        act = g.full_mask if active is None else active
        um = as_mask(u, g.n)
        if not is_convex(g, um, act):
            raise GraphError(f"playground {vertices_of(um)} is not convex")
        return self._succ_unchecked(um, act)

    def _succ_unchecked(self, um: int, act: int) -> tuple[int, ...]:
        out = {closure_after_move(self.g, um, x, act)
               for x in self._legal_unchecked(um, act)}
        return tuple(sorted(out, key=vertices_of))

    # -- values ----------------------------------------------------------

    def grundy(self, u=0, active: Optional[int] = None) -> int:
        g = self.g
        act = g.full_mask if active is None else active
        um = as_mask(u, g.n)
        if not is_convex(g, um, act):
            raise GraphError(f"playground {vertices_of(um)} is not convex")
        return self._value(um, act)

    def _value(self, um: int, act: int) -> int:
        if um == act:
            return 0
        key = (act, um)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if self.node_budget is not None and len(self._memo) >= self.node_budget:
            raise SolveBudgetError(f"node budget of {self.node_budget} positions exceeded")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolveBudgetError("time budget exceeded")
        succ = self._succ_unchecked(um, act)
        if not succ and self.variant is GameVariant.AUGMENTED_ARC_TO_V:
            value = 1  # stuck positions point at the full-set sink
        else:
            value = mex(self._value(s, act) for s in succ)
        self._memo[key] = value
        return value

    def analyze(self, u=0, active: Optional[int] = None) -> tuple[int, str, list[MoveEval]]:
        g = self.g
        act = g.full_mask if active is None else active
        um = as_mask(u, g.n)
        value = self.grundy(um, act)
        evals = []
        for x in self._legal_unchecked(um, act):
            after = closure_after_move(g, um, x, act)
            va = self._value(after, act)
            evals.append(MoveEval(x, after, va, va == 0))
        winner = FIRST if value != 0 else SECOND
        return value, winner, evals

    @property
    def positions_seen(self) -> int:
        return len(self._memo)


def grundy(g: Graph, u=0, variant: GameVariant = GameVariant.ORDINARY) -> int:
    return GameSolver(g, variant).grundy(u)


def analyze(g: Graph, u=0, variant: GameVariant = GameVariant.ORDINARY):
    return GameSolver(g, variant).analyze(u)


@dataclass(frozen=True)
class GameGraph:
    """Materialized labeled game DAG for one root playground."""

    variant: GameVariant
    n: int
    nodes: tuple[int, ...]              # playground masks, canonical order
    succ: tuple[tuple[int, ...], ...]   # per node, indices of successor nodes
    labels: tuple[int, ...]
    root: int                           # index of the root node

    def index_of(self, mask: int) -> int:
        return self.nodes.index(mask)

    def node_count(self) -> int:
        return len(self.nodes)

    def arc_count(self) -> int:
        return sum(len(s) for s in self.succ)

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant.value,
            "nodes": [
                {"set": list(vertices_of(m)), "grundy": self.labels[i],
                 "succ": list(self.succ[i])}
                for i, m in enumerate(self.nodes)
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph game {"]
        for i, m in enumerate(self.nodes):
            label = "{" + ",".join(map(str, vertices_of(m))) + "}:" + str(self.labels[i])
            lines.append(f'  n{i} [label="{label}"];')
        for i, outs in enumerate(self.succ):
            for j in outs:
                lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def build_game_graph(g: Graph, root=0, variant: GameVariant = GameVariant.ORDINARY,
                     node_budget: int = 200_000) -> GameGraph:
    """Materialize the reachable DAG from ``root`` and label every node.

    Under AUGMENTED_ARC_TO_V the full-set node is materialized and every
    stuck node gets an arc to it, so the uniform mex rule applies
    everywhere.
    """
    solver = GameSolver(g, variant)
    root_mask = as_mask(root, g.n)
    if not is_convex(g, root_mask):
        raise GraphError(f"root playground {vertices_of(root_mask)} is not convex")
    full = g.full_mask
    succ_of: dict[int, tuple[int, ...]] = {}
    stack = [root_mask]
    while stack:
        m = stack.pop()
        if m in succ_of:
            continue
        if len(succ_of) >= node_budget:
            raise SolveBudgetError(f"game graph node budget of {node_budget} exceeded")
        outs = solver._succ_unchecked(m, full) if m != full else ()
        if variant is GameVariant.AUGMENTED_ARC_TO_V and not outs and m != full:
            outs = (full,)
        succ_of[m] = outs
        stack.extend(o for o in outs if o not in succ_of)
    if variant is GameVariant.AUGMENTED_ARC_TO_V and full not in succ_of:
        succ_of[full] = ()
    nodes = sorted(succ_of, key=lambda m: (m.bit_count(), vertices_of(m)))
    index = {m: i for i, m in enumerate(nodes)}
    succ = tuple(tuple(index[o] for o in succ_of[m]) for m in nodes)
    labels = [0] * len(nodes)
    # arcs strictly grow the playground, so descending popcount is a
    # topological order
    for i in sorted(range(len(nodes)), key=lambda i: -nodes[i].bit_count()):
        outs = succ[i]
        if not outs:
            labels[i] = 0
        else:
            labels[i] = mex(labels[j] for j in outs)
    return GameGraph(variant, g.n, tuple(nodes), succ, tuple(labels), index[root_mask])


def verify_labels(gg: GameGraph) -> bool:
    """Recompute every label by Kahn topological order and compare.

    Independent of the construction-side labeling (which sorts by
    playground size); used as the second route of the dual-oracle check.
    """
    n = gg.node_count()
    # peel sinks first from the arc-reversed DAG
    radj: list[list[int]] = [[] for _ in range(n)]
    outdeg = [len(s) for s in gg.succ]
    for i, outs in enumerate(gg.succ):
        for j in outs:
            radj[j].append(i)
    queue = [i for i in range(n) if outdeg[i] == 0]
    labels: dict[int, int] = {}
    while queue:
        i = queue.pop(0)
        labels[i] = mex(labels[j] for j in gg.succ[i])
        for p in radj[i]:
            outdeg[p] -= 1
            if outdeg[p] == 0:
                queue.append(p)
    if len(labels) != n:
        return False  # a cycle: not a game DAG
    return all(labels[i] == gg.labels[i] for i in range(n))
