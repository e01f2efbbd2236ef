"""Connected-two-neighbor convexity and its hull operator.

A vertex set U is convex when the induced subgraph on U is connected and
no outside vertex has two or more neighbors inside U.  The hull of a set
is the least fixed point of repeatedly absorbing any vertex with at least
two neighbors in the current set.  For a legal game move (a new vertex at
distance at most two from a convex playground) the hull is connected and
is exactly the minimum convex superset, which is what makes the game
mechanics well defined; for arbitrary seeds the hull can be disconnected,
so :class:`HullResult` reports connectivity instead of enforcing it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional

from .bitsets import as_mask, bit, iter_bits, vertices_of
from .graph import Graph, GraphError, within_two_mask


class ConvexityError(GraphError):
    """Contract violation in a convexity operation."""


def is_convex(g: Graph, u, active: Optional[int] = None) -> bool:
    act = g.full_mask if active is None else active
    um = as_mask(u, g.n) & act
    if um == 0:
        return True
    if not g.is_connected(um):
        return False
    for x in iter_bits(act & ~um):
        if (g.adj_mask[x] & um).bit_count() >= 2:
            return False
    return True


@dataclass(frozen=True)
class HullResult:
    """Hull mask, whether the hull induces a connected subgraph, and the
    absorption order with, per vertex, the two inside neighbors that
    justified the absorption."""

    hull: int
    connected: bool
    addition_order: tuple[tuple[int, tuple[int, int]], ...]


def p3_hull(g: Graph, seed, active: Optional[int] = None) -> HullResult:
    """Least fixed point of the two-neighbor absorption rule.

    Deterministic: among eligible vertices the lowest index is absorbed
    first.  The resulting set does not depend on the order; only
    ``addition_order`` does.
    """
    act = g.full_mask if active is None else active
    hull = as_mask(seed, g.n) & act
    counts: dict[int, int] = {}
    ready: list[int] = []
    for x in iter_bits(act & ~hull):
        c = (g.adj_mask[x] & hull).bit_count()
        if c >= 2:
            counts[x] = c
            heapq.heappush(ready, x)
        elif c == 1:
            counts[x] = 1
    order: list[tuple[int, tuple[int, int]]] = []
    while ready:
        v = heapq.heappop(ready)
        if hull & bit(v):
            continue
        witnesses = tuple(vertices_of(g.adj_mask[v] & hull)[:2])
        hull |= bit(v)
        order.append((v, witnesses))
        for w in iter_bits(g.adj_mask[v] & act & ~hull):
            c = counts.get(w, 0) + 1
            counts[w] = c
            if c == 2:
                heapq.heappush(ready, w)
    return HullResult(hull, g.is_connected(hull), tuple(order))


def closure_after_move(g: Graph, u: int, x: int, active: int) -> int:
    """Hull of ``u | {x}`` assuming ``u`` is convex inside ``active``.

    Trusted fast path used by the solvers: with a convex base, only the
    played vertex can trigger absorptions, so the counter propagation
    starts from ``x`` alone.
    """
    cur = u | bit(x)
    counts: dict[int, int] = {}
    stack = [x]
    while stack:
        v = stack.pop()
        for w in iter_bits(g.adj_mask[v] & active & ~cur):
            c = counts.get(w)
            if c is None:
                c = (g.adj_mask[w] & cur).bit_count()
            else:
                c += 1
            counts[w] = c
            if c >= 2:
                cur |= bit(w)
                stack.append(w)
    return cur


def move_closure(g: Graph, u, x: int, active: Optional[int] = None) -> int:
    """Playground after playing ``x`` on convex playground ``u``.

    Contract errors: ``x`` already inside, ``x`` farther than two from a
    nonempty playground, or a non-convex playground.  The result is the
    minimum convex superset of ``u | {x}`` and is always connected.
    """
    act = g.full_mask if active is None else active
    um = as_mask(u, g.n)
    if not (act & bit(x)):
        raise ConvexityError(f"vertex {x} is not in the graph under play")
    if um & bit(x):
        raise ConvexityError(f"vertex {x} is already in the playground")
    if um and not (within_two_mask(g, um, act) & bit(x)):
        raise ConvexityError(f"vertex {x} is at distance > 2 from the playground")
    if not is_convex(g, um, act):
        raise ConvexityError("playground is not convex")
    result = closure_after_move(g, um, x, act)
    assert is_convex(g, result, act), "closure postcondition violated"
    return result


def enumerate_convex_sets(g: Graph, max_n: int = 20, max_visits: int = 1_000_000) -> list[int]:
    """All convex sets, including the empty set and the full vertex set.

    Walks the closed-set lattice in lectic order (classic next-closure),
    then keeps the connected ones.  The number of convex sets is
    exponential on some families (stars), so both a vertex cap and a
    visit budget apply.
    """
    if not g.is_connected():
        raise GraphError("enumerate_convex_sets requires a connected graph")
    if g.n > max_n:
        raise GraphError(f"enumerate_convex_sets capped at n <= {max_n}, got n = {g.n}")

    def close(m: int) -> int:
        while True:
            add = 0
            for x in iter_bits(g.full_mask & ~m):
                if (g.adj_mask[x] & m).bit_count() >= 2:
                    add |= bit(x)
            if not add:
                return m
            m |= add

    out: list[int] = []
    visits = 0
    cur = close(0)
    while True:
        visits += 1
        if visits > max_visits:
            raise GraphError(f"enumerate_convex_sets budget of {max_visits} closed sets exceeded")
        if cur == 0 or g.is_connected(cur):
            out.append(cur)
        if cur == g.full_mask:
            break
        nxt = None
        for i in range(g.n - 1, -1, -1):
            if cur & bit(i):
                continue
            below = bit(i) - 1
            cand = close((cur & below) | bit(i))
            if (cand & below & ~cur) == 0:
                nxt = cand
                break
        if nxt is None:
            break
        cur = nxt
    out.sort(key=vertices_of)
    return out
