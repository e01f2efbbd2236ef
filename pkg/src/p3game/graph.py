"""Immutable simple graphs plus the classical algorithms the solvers lean on.

Vertices are dense indices ``0..n-1``.  Two text encodings are supported:

* edge-list text: lines ``"u v"``, ``#`` comments, blank lines ignored.
  A ``# n <count>`` comment declares the vertex count (needed for graphs
  with isolated vertices, e.g. a single vertex).
* JSON: ``{"format": "p3graph-v1", "n": <int>, "edges": [[u, v], ...]}``.

Serialization emits edges sorted lexicographically, so
``parse_graph(serialize_graph(g)) == g`` and serializing a parsed text is
canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

from .bitsets import as_mask, bit, iter_bits, vertices_of


class GraphError(Exception):
    """Domain error raised by graph construction and graph algorithms."""


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class NotBipartiteError(GraphError):
    """Raised when a 2-coloring fails; carries an odd cycle as witness."""

    def __init__(self, odd_cycle: list[int]):
        self.odd_cycle = odd_cycle
        super().__init__(f"graph is not bipartite: odd cycle {odd_cycle}")


class Graph:
    """Undirected simple graph with sorted adjacency lists and neighbor masks."""

    __slots__ = ("n", "adj", "adj_mask", "m", "full_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        lists: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if masks[u] & bit(v):
                raise GraphError(f"duplicate edge ({min(u, v)},{max(u, v)})")
            masks[u] |= bit(v)
            masks[v] |= bit(u)
            lists[u].append(v)
            lists[v].append(u)
            count += 1
        self.n = n
        self.adj = tuple(tuple(sorted(l)) for l in lists)
        self.adj_mask = tuple(masks)
        self.m = count
        self.full_mask = (1 << n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] & bit(v))

    def neighborhood_mask(self, vertices: int) -> int:
        """Union of neighbor masks over the members of ``vertices``."""
        out = 0
        for v in iter_bits(vertices):
            out |= self.adj_mask[v]
        return out

    def is_connected(self, active: Optional[int] = None) -> bool:
        act = self.full_mask if active is None else active
        if act == 0:
            return True
        start = (act & -act).bit_length() - 1
        return self.reachable_from(bit(start), act) == act

    def reachable_from(self, sources: int, active: int) -> int:
        seen = sources & active
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj_mask[v]
            frontier = nxt & active & ~seen
            seen |= frontier
        return seen

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse either accepted format; JSON is detected by a leading '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_text(text: str) -> Graph:
    edges: list[tuple[int, int]] = []
    declared_n = 0
    max_seen = -1
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        comment = raw.split("#", 1)[1].strip() if "#" in raw else ""
        if comment.startswith("n ") or comment.startswith("n="):
            tok = comment[2:].strip()
            if tok.isdigit():
                declared_n = max(declared_n, int(tok))
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex index in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({key[0]},{key[1]})", lineno)
        seen.add(key)
        edges.append(key)
        max_seen = max(max_seen, u, v)
    n = max(declared_n, max_seen + 1)
    if declared_n and max_seen >= declared_n:
        raise ParseError(f"edge endpoint {max_seen} out of range for declared n={declared_n}")
    return Graph(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or data.get("format") != "p3graph-v1":
        raise ParseError('JSON graph must declare "format": "p3graph-v1"')
    n = data.get("n")
    if not isinstance(n, int) or n < 0:
        raise ParseError('"n" must be a nonnegative integer')
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be a list of [u, v] pairs')
    edges = []
    for item in raw_edges:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            raise ParseError(f"bad edge entry {item!r}")
        edges.append((item[0], item[1]))
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def serialize_graph(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def graph_to_json_dict(g: Graph) -> dict:
    return {"format": "p3graph-v1", "n": g.n, "edges": [list(e) for e in sorted(g.edges())]}


def bipartition(g: Graph) -> tuple[int, int]:
    """2-color; per component the lowest-index vertex goes to side A.

    Returns ``(side_a, side_b)`` masks.  Raises :class:`NotBipartiteError`
    with an odd cycle when no 2-coloring exists.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    side_a = side_b = 0
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for v in g.adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotBipartiteError(_odd_cycle(parent, u, v))
    for v in range(g.n):
        if color[v] == 0:
            side_a |= bit(v)
        else:
            side_b |= bit(v)
    return side_a, side_b


def _odd_cycle(parent: list[int], u: int, v: int) -> list[int]:
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    path_v = [v]
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    in_u = {x: i for i, x in enumerate(path_u)}
    meet_i = next(i for i, x in enumerate(path_v) if x in in_u)
    meet = path_v[meet_i]
    return path_u[:in_u[meet] + 1] + path_v[:meet_i][::-1]


def components(g: Graph, removed=0) -> list[int]:
    """Connected components of the graph minus ``removed``, as masks
    ordered by smallest member."""
    rem = as_mask(removed, g.n)
    alive = g.full_mask & ~rem
    out = []
    while alive:
        start = alive & -alive
        comp = g.reachable_from(start, alive)
        out.append(comp)
        alive &= ~comp
    return out


UNREACHED = None


def distances_from_set(g: Graph, sources) -> list[Optional[int]]:
    """Multi-source BFS distances; unreached vertices get ``None``."""
    src = as_mask(sources, g.n)
    dist: list[Optional[int]] = [None] * g.n
    frontier = src
    d = 0
    seen = src
    while frontier:
        for v in iter_bits(frontier):
            dist[v] = d
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj_mask[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def within_two_mask(g: Graph, u: int, active: int) -> int:
    """Vertices of ``active`` at distance <= 2 from set ``u`` (including u).

    Distances are measured inside the induced subgraph on ``active``.
    """
    u &= active
    n1 = 0
    for v in iter_bits(u):
        n1 |= g.adj_mask[v]
    n1 &= active
    n2 = 0
    for v in iter_bits(n1 & ~u):
        n2 |= g.adj_mask[v]
    return (u | n1 | (n2 & active)) & active


def cutvertices(g: Graph, active: Optional[int] = None) -> int:
    """Articulation vertices of the (induced) graph, as a mask.

    Iterative lowlink DFS.  Raises GraphError when the graph is
    disconnected.
    """
    act = g.full_mask if active is None else active
    if act == 0:
        return 0
    if not g.is_connected(act):
        raise GraphError("cutvertices requires a connected graph")
    index = {}
    low = {}
    out = 0
    root = (act & -act).bit_length() - 1
    counter = 0
    root_children = 0
    # stack entries: (vertex, parent, iterator over neighbors)
    stack = [(root, -1, iter(g.adj[root]))]
    index[root] = low[root] = counter
    counter += 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if not (act & bit(w)):
                continue
            if w not in index:
                index[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            elif w != parent:
                low[v] = min(low[v], index[w])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= index[parent]:
                out |= bit(parent)
    if root_children > 1:
        out |= bit(root)
    return out


def induced_p3s(g: Graph) -> list[tuple[int, int, int]]:
    """All induced paths on three vertices as (end, center, end), ends ascending."""
    out = []
    for c in range(g.n):
        nbrs = g.adj[c]
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                x, y = nbrs[i], nbrs[j]
                if not g.has_edge(x, y):
                    out.append((x, c, y))
    out.sort()
    return out


@dataclass(frozen=True)
class SeparatorCertificate:
    """A separating vertex set with the components it leaves behind.

    ``sides`` are the components of the graph minus ``separator``;
    ``close_sides`` indexes the components whose whole neighborhood equals
    the separator.
    """

    separator: int
    sides: tuple[int, ...]
    close_sides: tuple[int, ...]

    def canonical_key(self) -> tuple[int, ...]:
        return vertices_of(self.separator)


def separator_certificate(g: Graph, separator: int, active: Optional[int] = None) -> SeparatorCertificate:
    act = g.full_mask if active is None else active
    sides = tuple(components(g, separator | (g.full_mask & ~act)))
    close = tuple(i for i, c in enumerate(sides)
                  if (g.neighborhood_mask(c) & act & ~c) == (separator & act))
    return SeparatorCertificate(separator, sides, close)


def minimal_separators(g: Graph, max_n: int = 14) -> list[SeparatorCertificate]:
    """All minimal separators: sets S with at least two components of G-S
    whose whole neighborhood is S (equivalently, minimal a,b-separators
    for some nonadjacent pair a,b).

    Seeds with neighborhoods of components of G-N[v] and expands each
    found set through the neighborhoods of its own vertices; the close
    condition at the end filters out non-minimal byproducts.  Exhaustive
    enumeration only makes sense at desk scale, hence the vertex cap.
    """
    if not g.is_connected():
        raise GraphError("minimal_separators requires a connected graph")
    if g.n > max_n:
        raise GraphError(f"minimal_separators capped at n <= {max_n}, got n = {g.n}")
    seen: set[int] = set()
    queue: list[int] = []

    def offer(comp: int) -> None:
        s = g.neighborhood_mask(comp) & ~comp
        if s and s not in seen:
            seen.add(s)
            queue.append(s)

    for v in range(g.n):
        for comp in components(g, g.adj_mask[v] | bit(v)):
            offer(comp)
    while queue:
        s = queue.pop()
        for x in iter_bits(s):
            for comp in components(g, s | g.adj_mask[x]):
                offer(comp)
    certs = [separator_certificate(g, s) for s in seen]
    certs = [c for c in certs if len(c.close_sides) >= 2]
    certs.sort(key=lambda c: c.canonical_key())
    return certs
