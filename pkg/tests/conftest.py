"""Shared test fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's bitmask machinery:
they work on networkx graphs and plain Python sets, so agreement with
the library is a genuine two-route check.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from p3game import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_is_convex(gn: nx.Graph, u: set) -> bool:
    if not u:
        return True
    if not nx.is_connected(gn.subgraph(u)):
        return False
    return all(len(set(gn.adj[v]) & u) <= 1 for v in gn.nodes if v not in u)


def naive_hull(gn: nx.Graph, seed: set) -> set:
    cur = set(seed)
    while True:
        add = {v for v in gn.nodes
               if v not in cur and len(set(gn.adj[v]) & cur) >= 2}
        if not add:
            return cur
        cur |= add


def naive_convex_sets(gn: nx.Graph) -> set[frozenset]:
    nodes = list(gn.nodes)
    out = set()
    for r in range(len(nodes) + 1):
        for combo in itertools.combinations(nodes, r):
            if naive_is_convex(gn, set(combo)):
                out.add(frozenset(combo))
    return out


def naive_cutvertices(gn: nx.Graph) -> set:
    base = nx.number_connected_components(gn)
    out = set()
    for v in gn.nodes:
        h = gn.copy()
        h.remove_node(v)
        if h.number_of_nodes() and nx.number_connected_components(h) > base:
            out.add(v)
    return out


def naive_minimal_separators(gn: nx.Graph) -> set[frozenset]:
    """Subset brute force: S is kept when at least two components of
    G - S have neighborhood exactly S."""
    nodes = list(gn.nodes)
    out = set()
    for r in range(1, len(nodes) - 1):
        for combo in itertools.combinations(nodes, r):
            s = set(combo)
            rest = gn.subgraph(set(nodes) - s)
            close = 0
            for comp in nx.connected_components(rest):
                nbhd = set()
                for v in comp:
                    nbhd |= set(gn.adj[v])
                if nbhd - set(comp) == s:
                    close += 1
            if close >= 2:
                out.add(frozenset(s))
    return out


def naive_moves(gn: nx.Graph, u: set) -> list:
    if not u:
        return list(gn.nodes)
    lengths = {}
    for s in u:
        for v, d in nx.single_source_shortest_path_length(gn, s, cutoff=2).items():
            lengths[v] = min(lengths.get(v, 99), d)
    return [v for v in gn.nodes if v not in u and lengths.get(v, 99) <= 2]


def naive_grundy(gn: nx.Graph, u=frozenset(), variant: str = "ordinary",
                 memo=None) -> int:
    """Fully independent game oracle over frozensets; tiny graphs only."""
    if memo is None:
        memo = {}
    u = frozenset(u)
    everything = frozenset(gn.nodes)
    if u == everything:
        return 0
    key = (u, variant)
    if key in memo:
        return memo[key]
    succ = set()
    for x in naive_moves(gn, set(u)):
        succ.add(frozenset(naive_hull(gn, set(u) | {x})))
    if variant != "ordinary":
        succ = {s for s in succ if s != everything}
    if not succ and variant == "arc-to-v":
        value = 1
    else:
        vals = {naive_grundy(gn, s, variant, memo) for s in succ}
        value = next(k for k in itertools.count() if k not in vals)
    memo[key] = value
    return value


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240817)


def random_connected_graph(rnd: random.Random, n: int, p: float = 0.4) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rnd.random() < p]
        g = Graph(n, edges)
        if g.is_connected():
            return g
