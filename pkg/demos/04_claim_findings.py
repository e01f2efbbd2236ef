"""The claim checker's headline findings.

The workbench checks a set of structural and game-value statements over
exhaustive small-graph corpora.  Several widely assumed statements fail,
and each failure ships with a replayable witness.  This script shows the
three most consequential ones at desk scale.
"""

from p3game import (cycle, grundy, is_convex, ladder, mask_of, p3_hull,
                    vertices_of)
from p3game.claims import replay_witness, run_claim, summary_table

print("=== finding 1: convex sets are not closed under intersection ===")
c6 = cycle(6)
u1, u2 = mask_of([0, 1, 2, 3]), mask_of([0, 3, 4, 5])
print("on the 6-cycle, both half-cycles are convex:",
      is_convex(c6, u1), is_convex(c6, u2))
inter = u1 & u2
print(f"their intersection {vertices_of(inter)} is disconnected, hence not "
      f"convex: {is_convex(c6, inter)}")
print("So 'smallest convex superset' is ill-defined for arbitrary seeds;")
print("game moves are safe because a distance-two move always absorbs its")
print("midpoints and the hull is then the unique minimum convex superset.")

print()
print("=== finding 2: a diagonal pair need not close the whole graph ===")
lad3 = ladder(3)
hull = p3_hull(lad3, {0, 4}).hull
print("2x3 ladder, diagonal pair {0,4} of the first square closes to",
      vertices_of(hull), "not the whole graph")

print()
print("=== finding 3: biconnected does not mean second-player win ===")
print("value of the 2x3 ladder:", grundy(lad3), " (nonzero: first player wins)")
print("value of the 4-cycle:   ", grundy(cycle(4)), "(the classic case still holds)")

print()
print("=== the full report over reduced corpora ===")
reports = [run_claim(cid, max_n=6) for cid in
           ("CL1", "CL4", "CL5", "CL6", "CL8")]
print(summary_table(reports))

print()
print("every FAIL witness replays through the public operations:")
first_fail = next(r for r in reports if r.verdict == "FAIL")
w = first_fail.witnesses[0]
print(f"  {first_fail.claim_id} witness op={w['op']} args={w['args']}")
print(f"  stored actual:   {w['actual']}")
print(f"  replayed actual: {replay_witness(w)}")
