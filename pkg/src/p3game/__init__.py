"""Solver workbench for the P3 vertex game on graphs.

Play: two players alternately pick a vertex at distance at most two from
the current playground; the playground becomes the convex closure of the
old playground plus the pick; whoever must move when the playground is
the whole vertex set loses.  The package provides exact game values (an
exhaustive DAG oracle and a separator-decomposition solver), convexity
primitives, graph-family tooling, an empirical claim checker, a CLI, and
an HTTP service for interactive play.
"""

from .bitsets import mask_of, vertices_of
from .convexity import (HullResult, enumerate_convex_sets, is_convex,
                        move_closure, p3_hull)
from .families import (FAMILIES, FamilySpec, complete_bipartite, cycle,
                       enumerate_chordal_bipartite, enumerate_connected_graphs,
                       generate, is_biconnected, is_chordal_bipartite, ladder,
                       path, random_chordal_bipartite, random_tree, star)
from .game import (FIRST, SECOND, GameGraph, GameSolver, GameVariant,
                   MoveEval, SolveBudgetError, analyze, build_game_graph,
                   grundy, mex, nim_sum, verify_labels)
from .graph import (Graph, GraphError, NotBipartiteError, ParseError,
                    SeparatorCertificate, bipartition, components,
                    cutvertices, distances_from_set, graph_to_json_dict,
                    induced_p3s, minimal_separators, parse_graph,
                    serialize_graph)
from .solver import (FastSolver, SolveStats, Subgame, decompose,
                     find_splitter, grundy_fast, trim_finishers)

__version__ = "0.1.0"

__all__ = [
    "FAMILIES", "FIRST", "FamilySpec", "FastSolver", "GameGraph",
    "GameSolver", "GameVariant", "Graph", "GraphError", "HullResult",
    "MoveEval", "NotBipartiteError", "ParseError", "SECOND",
    "SeparatorCertificate", "SolveBudgetError", "SolveStats", "Subgame",
    "analyze", "bipartition", "build_game_graph", "complete_bipartite",
    "components", "cutvertices", "cycle", "decompose",
    "distances_from_set", "enumerate_chordal_bipartite",
    "enumerate_connected_graphs", "enumerate_convex_sets", "find_splitter",
    "generate", "graph_to_json_dict", "grundy", "grundy_fast",
    "induced_p3s", "is_biconnected", "is_chordal_bipartite", "is_convex",
    "ladder", "mask_of", "mex", "minimal_separators", "move_closure",
    "nim_sum", "p3_hull", "parse_graph", "path", "random_chordal_bipartite",
    "random_tree", "serialize_graph", "star", "trim_finishers",
    "verify_labels", "vertices_of",
]
