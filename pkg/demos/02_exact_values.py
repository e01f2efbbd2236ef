"""Exact game values from the exhaustive oracle.

The game graph is a DAG over playgrounds; labeling it backwards with the
minimum-excluded-value rule gives each position its nimber.  A position
is a first-player win exactly when its value is nonzero, and the winning
moves are the ones leading to value-0 positions.
"""

from p3game import (GameVariant, analyze, build_game_graph, cycle, grundy,
                    parse_graph, path, vertices_of)

for name, g in [("single vertex", parse_graph('{"format":"p3graph-v1","n":1,"edges":[]}')),
                ("one edge", parse_graph("0 1")),
                ("path on 3", parse_graph("0 1\n1 2")),
                ("path on 4", path(4)),
                ("4-cycle", cycle(4))]:
    value, winner, evals = analyze(g)
    winning = [e.vertex for e in evals if e.winning]
    print(f"{name:14s} value {value}  winner {winner:6s}  winning first moves {winning}")

print()
print("=== the full game DAG of the 3-path ===")
gg = build_game_graph(parse_graph("0 1\n1 2"))
for i, node in enumerate(gg.nodes):
    succ = [list(vertices_of(gg.nodes[j])) for j in gg.succ[i]]
    print(f"  {list(vertices_of(node))!s:12s} value {gg.labels[i]}  -> {succ}")

print()
print("=== two readings of the no-finishing-moves variant ===")
c4 = cycle(4)
print("ordinary value of the 4-cycle:    ", grundy(c4))
print("stuck-player-loses trimmed value: ",
      grundy(c4, variant=GameVariant.AUGMENTED_NORMAL_PLAY))
print("arc-to-sink trimmed value:        ",
      grundy(c4, variant=GameVariant.AUGMENTED_ARC_TO_V))
print("The two trimmed semantics disagree; only the first matches the")
print("ordinary value here, which is why it is the package default.")
