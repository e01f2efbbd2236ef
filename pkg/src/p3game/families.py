"""Graph family generators, chordal-bipartite recognition, small corpora.

The enumeration helpers power the claim checker and the acceptance
suite: connected graphs up to isomorphism at desk scale, and connected
chordal bipartite graphs up to n = 8.  Canonical forms are exact (color
refinement followed by minimum encoding over the residual permutations),
which is affordable at these sizes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations_with_replacement, permutations, product
from typing import Iterator, Optional

from .bitsets import bit, iter_bits
from .graph import Graph, GraphError, NotBipartiteError, bipartition, cutvertices


# ---------------------------------------------------------------------------
# generators

def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(k: int) -> Graph:
    _require(k >= 3, "cycle needs k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def ladder(k: int) -> Graph:
    """Two rails 0..k-1 and k..2k-1 joined by the rungs i -- k+i."""
    _require(k >= 1, "ladder needs k >= 1")
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(k + i, k + i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def complete_bipartite(p: int, q: int) -> Graph:
    _require(p >= 1 and q >= 1, "complete_bipartite needs p, q >= 1")
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(leaves: int) -> Graph:
    """Center 0 with the given number of leaves."""
    _require(leaves >= 0, "star needs leaves >= 0")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    _require(n >= 1, "random_tree needs n >= 1")
    rng = random.Random(seed)
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Graph(n, edges)


def random_chordal_bipartite(n: int, extra_edges: Optional[int] = None,
                             seed: Optional[int] = None) -> Graph:
    """Random tree plus random cross edges, rejecting any addition that
    breaks the no-long-induced-cycle property (elimination screen)."""
    _require(n >= 1, "random_chordal_bipartite needs n >= 1")
    rng = random.Random(seed)
    g = random_tree(n, seed=rng.randrange(1 << 30))
    target = max(0, n // 2 if extra_edges is None else extra_edges)
    side_a, side_b = bipartition(g)
    candidates = [(u, v) for u in iter_bits(side_a) for v in iter_bits(side_b)
                  if not g.has_edge(u, v)]
    rng.shuffle(candidates)
    added = 0
    for u, v in candidates:
        if added >= target:
            break
        trial = Graph(n, g.edges() + [(u, v)])
        if _eliminates_to_empty(trial):
            g = trial
            added += 1
    return g


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]
    seed: Optional[int] = None


FAMILIES: dict[str, dict] = {
    "path": {"params": ["n"], "fn": path, "seeded": False,
             "doc": "path on n vertices"},
    "cycle": {"params": ["k"], "fn": cycle, "seeded": False,
              "doc": "cycle on k vertices"},
    "ladder": {"params": ["k"], "fn": ladder, "seeded": False,
               "doc": "2xk grid: two rails joined by k rungs"},
    "complete_bipartite": {"params": ["p", "q"], "fn": complete_bipartite,
                           "seeded": False, "doc": "complete bipartite K_{p,q}"},
    "star": {"params": ["leaves"], "fn": star, "seeded": False,
             "doc": "one center joined to the given number of leaves"},
    "random_tree": {"params": ["n"], "fn": random_tree, "seeded": True,
                    "doc": "uniform random labeled tree"},
    "random_cb": {"params": ["n", "extra_edges"], "fn": random_chordal_bipartite,
                  "seeded": True,
                  "doc": "random tree densified with chordality-preserving cross edges"},
}


def generate(spec: FamilySpec) -> Graph:
    info = FAMILIES.get(spec.name)
    if info is None:
        raise GraphError(f"unknown family {spec.name!r}; known: {sorted(FAMILIES)}")
    want = len(info["params"])
    got = list(spec.params)
    if spec.name == "random_cb" and len(got) == 1:
        got.append(None)  # extra_edges defaults from n
    if len(got) != want:
        raise GraphError(f"family {spec.name!r} takes {want} parameter(s) "
                         f"{info['params']}, got {list(spec.params)}")
    if info["seeded"]:
        return info["fn"](*got, seed=spec.seed if spec.seed is not None else 0)
    return info["fn"](*got)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


# ---------------------------------------------------------------------------
# chordal bipartite recognition

def is_chordal_bipartite(g: Graph, method: str = "auto"):
    """True when the graph is bipartite with no induced cycle longer than 4.

    Returns ``(flag, witness)``; a failing witness is an odd cycle or an
    induced cycle on six or more vertices, as a vertex tuple.

    ``method``: "search" walks induced paths and is the definitional
    arbiter; "elimination" repeatedly deletes bisimplicial edges, fast
    but witness-free; "auto" uses the search at desk sizes and the
    elimination screen (with a best-effort witness search) above them.
    """
    try:
        bipartition(g)
    except NotBipartiteError as exc:
        return False, tuple(exc.odd_cycle)
    if method not in ("auto", "search", "elimination"):
        raise ValueError(f"unknown method {method!r}")
    if method == "elimination" or (method == "auto" and g.n > 16):
        if _eliminates_to_empty(g):
            return True, None
        cyc = _find_long_induced_cycle(g)
        return False, cyc
    cyc = _find_long_induced_cycle(g)
    return (cyc is None), cyc


def _find_long_induced_cycle(g: Graph, step_budget: int = 2_000_000):
    """First induced cycle on >= 6 vertices found by extending induced
    paths from their minimum vertex; None when there is none."""
    steps = 0
    for s in range(g.n):
        # stack of (path_tuple, path_mask); s is the path minimum
        stack = [((s, v), bit(s) | bit(v)) for v in g.adj[s] if v > s]
        while stack:
            steps += 1
            if steps > step_budget:
                raise GraphError("induced-cycle search budget exceeded")
            pathvec, pmask = stack.pop()
            last = pathvec[-1]
            for w in g.adj[last]:
                if w <= s or (pmask & bit(w)):
                    continue
                touched = g.adj_mask[w] & pmask
                if touched == bit(last):
                    stack.append((pathvec + (w,), pmask | bit(w)))
                elif touched == (bit(last) | bit(s)) and len(pathvec) + 1 >= 6:
                    return pathvec + (w,)
    return None


def _eliminates_to_empty(g: Graph) -> bool:
    """Greedy bisimplicial-edge elimination; True when all edges go."""
    try:
        bipartition(g)
    except NotBipartiteError:
        return False
    adj = list(g.adj_mask)
    edges = set(g.edges())
    while edges:
        found = None
        for (u, v) in sorted(edges):
            nu, nv = adj[u], adj[v]
            ok = True
            for a in iter_bits(nv & ~bit(u)):
                if (adj[a] & nu & ~bit(v)) != (nu & ~bit(v)):
                    ok = False
                    break
            if ok:
                found = (u, v)
                break
        if found is None:
            return False
        u, v = found
        adj[u] &= ~bit(v)
        adj[v] &= ~bit(u)
        edges.remove(found)
    return True


def is_biconnected(g: Graph) -> bool:
    """Connected, at least two vertices, no cut vertices."""
    if g.n < 2 or not g.is_connected():
        return False
    return cutvertices(g) == 0


# ---------------------------------------------------------------------------
# canonical forms and exhaustive corpora

def _wl_signatures(g: Graph) -> list:
    sigs: list = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        nxt = [(sigs[v], tuple(sorted(sigs[w] for w in g.adj[v])))
               for v in range(g.n)]
        if _partition(nxt) == _partition(sigs):
            break
        sigs = nxt
    return sigs


def _partition(sigs: list) -> list[tuple[int, ...]]:
    groups: dict = {}
    for v, s in enumerate(sigs):
        groups.setdefault(s, []).append(v)
    return sorted(tuple(vs) for vs in groups.values())


def canonical_form(g: Graph) -> tuple[int, int]:
    """Exact isomorphism invariant: (n, minimum upper-triangle encoding
    over all permutations compatible with the color refinement)."""
    n = g.n
    if n == 0:
        return (0, 0)
    sigs = _wl_signatures(g)
    order = sorted(range(n), key=lambda v: sigs[v])
    groups: list[list[int]] = []
    for v in order:
        if groups and sigs[groups[-1][-1]] == sigs[v]:
            groups[-1].append(v)
        else:
            groups.append([v])
    best: Optional[int] = None
    for combo in product(*(permutations(grp) for grp in groups)):
        perm = list(chain.from_iterable(combo))
        code = 0
        for i in range(n):
            ai = g.adj_mask[perm[i]]
            for j in range(i + 1, n):
                code = (code << 1) | ((ai >> perm[j]) & 1)
        if best is None or code < best:
            best = code
    return (n, best)


_CONNECTED_CACHE: dict[int, tuple[Graph, ...]] = {}


def enumerate_connected_graphs(n: int, max_n: int = 8) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class.

    Built by repeatedly attaching a new vertex to every nonempty subset
    of each smaller representative (every connected graph has a
    non-cut vertex, so this reaches everything) and deduplicating by
    canonical form.
    """
    if n < 1:
        raise GraphError("enumerate_connected_graphs needs n >= 1")
    if n > max_n:
        raise GraphError(f"enumerate_connected_graphs capped at n <= {max_n}")
    hit = _CONNECTED_CACHE.get(n)
    if hit is not None:
        return hit
    if n == 1:
        reps: tuple[Graph, ...] = (Graph(1, []),)
    else:
        parents = enumerate_connected_graphs(n - 1, max_n=max_n)
        seen: dict[tuple[int, int], Graph] = {}
        for h in parents:
            base_edges = h.edges()
            for attach in range(1, 1 << (n - 1)):
                edges = base_edges + [(v, n - 1) for v in iter_bits(attach)]
                g = Graph(n, edges)
                key = canonical_form(g)
                if key not in seen:
                    seen[key] = g
        reps = tuple(seen[k] for k in sorted(seen))
    _CONNECTED_CACHE[n] = reps
    return reps


def _bipartite_matrix_canon(rows: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Canonical form of a 0/1 matrix under independent row and column
    permutations: minimum, over row orders, of the sorted column tuple."""
    p = len(rows)
    best: Optional[tuple[int, ...]] = None
    for perm in permutations(range(p)):
        cols = []
        for j in range(q):
            c = 0
            for i, ri in enumerate(perm):
                c |= ((rows[ri] >> j) & 1) << i
            cols.append(c)
        cols.sort()
        cand = tuple(cols)
        if best is None or cand < best:
            best = cand
    return best  # type: ignore[return-value]


@lru_cache(maxsize=None)
def _connected_bipartite_reps(n: int) -> tuple[Graph, ...]:
    """Connected bipartite graphs on n vertices up to isomorphism,
    enumerated per bipartition split via matrix canonical forms.  The
    split sizes are themselves invariants of a connected bipartite
    graph, so no cross-split deduplication is needed."""
    if n == 1:
        return (Graph(1, []),)
    out: list[Graph] = []
    for p in range(1, n // 2 + 1):
        q = n - p
        seen: set[tuple[int, ...]] = set()
        for rows in combinations_with_replacement(range(1 << q), p):
            if any(r == 0 for r in rows):
                continue  # isolated left vertex: disconnected
            canon = _bipartite_matrix_canon(rows, q)
            if p == q:
                # class swap symmetry: also canonicalize the transpose
                tr = tuple(sum(((rows[i] >> j) & 1) << i for i in range(p))
                           for j in range(q))
                canon = min(canon, _bipartite_matrix_canon(tr, p))
            if canon in seen:
                continue
            seen.add(canon)
            edges = [(i, p + j) for i in range(p) for j in range(q)
                     if (rows[i] >> j) & 1]
            g = Graph(n, edges)
            if g.is_connected():
                out.append(g)
    return tuple(out)


def enumerate_chordal_bipartite(n: int, max_n: int = 8) -> Iterator[Graph]:
    """Every connected chordal bipartite graph on n vertices, once per
    isomorphism class."""
    if n < 1:
        raise GraphError("enumerate_chordal_bipartite needs n >= 1")
    if n > max_n:
        raise GraphError(f"enumerate_chordal_bipartite capped at n <= {max_n}")
    for g in _connected_bipartite_reps(n):
        ok, _ = is_chordal_bipartite(g, method="search")
        if ok:
            yield g


def chordal_bipartite_corpus(max_vertices: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_vertices + 1):
        out.extend(enumerate_chordal_bipartite(n))
    return out
