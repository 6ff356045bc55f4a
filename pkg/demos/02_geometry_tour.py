"""A tour of the point geometry at (n, q) = (2, 4).

Shows the rank-1 shell sizes, the number of lines through a point, the
common neighbourhoods of point pairs and triples, and the one place graph
distance exceeds matrix rank: even characteristic, zero-diagonal
difference.
"""

from itertools import combinations

import symldpc as s

sp = s.sym_space(2, 4)
q = sp.q
zero = sp.zero()

shell = sp.deleted_neighbourhood(zero)
print(f"|U(0)| = {len(shell)} (expected q^n - 1 = {q**2 - 1})")
print(f"lines through a point: {len(sp.lines_through(zero))} "
      f"(expected (q^n-1)/(q-1) = {(q**2 - 1) // (q - 1)})")

# graph distance vs. matrix rank of the difference
diag = sp.corner(1, 0, 1)
offdiag = sp.sym_unit(1, 2)
print(f"\nrank(diag(1,1)) = {sp.rank(diag)}, "
      f"graph distance to 0 = {sp.graph_distance(zero, diag)}")
print(f"rank(offdiag)   = {sp.rank(offdiag)}, "
      f"graph distance to 0 = {sp.graph_distance(zero, offdiag)}  "
      "(zero diagonal costs one extra step in characteristic 2)")

# common neighbourhood sizes over all non-collinear pairs
collinear = set()
for line in sp.lines():
    collinear.update((a, b) for a in line.points for b in line.points if a != b)

sizes = {}
for i, j in combinations(range(sp.size), 2):
    if (i, j) in collinear:
        continue
    common = sp.common_deleted_neighbourhood([sp.point_at(i), sp.point_at(j)])
    sizes[len(common)] = sizes.get(len(common), 0) + 1
print(f"\ncommon-neighbourhood sizes over non-collinear pairs: {sizes} "
      f"(only 0 and q = {q} occur)")

triple_sizes = set()
for i, j, k in combinations(range(sp.size), 3):
    if (i, j) in collinear or (i, k) in collinear or (j, k) in collinear:
        continue
    pts = [sp.point_at(i), sp.point_at(j), sp.point_at(k)]
    triple_sizes.add(len(sp.common_deleted_neighbourhood(pts)))
print(f"sizes over non-collinear triples: {sorted(triple_sizes)} (subset of 0, 1, q)")

g = sp.random_motion(__import__("random").Random(1))
a, b = sp.point_at(5), sp.point_at(44)
print(f"\na motion preserves adjacency: d({sp.arithmetic_distance(a, b)}) -> "
      f"{sp.arithmetic_distance(sp.apply_motion(g, a), sp.apply_motion(g, b))}")
