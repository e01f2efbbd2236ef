"""A guided tour of the game mechanics.

Two players grow a shared 'playground'.  A move picks a vertex within
distance two of the playground; the playground then absorbs every vertex
that has two or more neighbors inside, repeatedly, until stable (the
convex closure).  Whoever must move when the playground is the whole
graph loses.  The closure is the game's only non-obvious mechanic, so we
watch it work.
"""

from p3game import cycle, move_closure, p3_hull, path, vertices_of

print("=== closure on a 4-cycle ===")
c4 = cycle(4)
print("graph: 4-cycle 0-1-2-3-0")
print("playground {0}, play the opposite corner 2:")
after = move_closure(c4, {0}, 2)
print("  both common neighbors 1 and 3 get two inside neighbors,")
print("  so the closure fills the whole graph:", vertices_of(after))

print()
print("=== closure can cascade ===")
p4 = path(4)
print("graph: path 0-1-2-3")
print("playground {0,1}, play vertex 3 (distance two through 2):")
after = move_closure(p4, {0, 1}, 3)
print("  the midpoint 2 is absorbed, then nothing else:", vertices_of(after))

print()
print("=== the hull operator underneath ===")
res = p3_hull(p4, {0, 2})
print("hull of {0,2} on the path:", vertices_of(res.hull))
for v, (w1, w2) in res.addition_order:
    print(f"  vertex {v} absorbed because of inside neighbors {w1} and {w2}")

print()
print("=== a hull that stalls ===")
from p3game import ladder
lad3 = ladder(3)
print("graph: 2x3 ladder, rails 0-1-2 and 3-4-5, rungs i--(3+i)")
res = p3_hull(lad3, {0, 4})
print("hull of the diagonal pair {0,4}:", vertices_of(res.hull))
print("  the closure absorbs the first square and then stops; vertices 2")
print("  and 5 keep a single inside neighbor each.  This 2x2 block is a")
print("  convex set that simple catalogs of ladder convex sets miss.")
