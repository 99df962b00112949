"""
Ladders and blockwise ideals
============================

A ladder is bounded by a staircase of lower corners and a staircase of upper
corners.  Cutting it at each upper corner gives pieces ``L_i``, and the
two-sided ladder ideal takes minors of size ``r_i`` from ``L_i``.
"""

# %%
from detgb import (
    Ladder, TermOrder, criterion_attend_or_lcm, expand_minor, is_groebner, is_reduced_gb,
    ladder_to_vexillary, one_sided_ideal, two_sided_generators, vexillary_to_ladder,
)

lad = Ladder(((1, 9), (2, 8), (5, 7), (6, 5), (8, 4), (9, 1)), ((1, 6), (3, 4), (4, 2), (6, 1)))
print(lad.render())
print(lad.block.diagonality())

# %%
# The corner data is recovered from the cells alone.

print(Ladder.from_cells(lad.cells) == lad)

# %%
# Two-sided generators
# --------------------
# Each minor of ``L_i`` that would also be picked up by a neighbouring piece
# is dropped from group ``i``.  What is left is a reduced basis under a
# diagonal order.

small = Ladder(((5, 5),), ((1, 3), (3, 1)))
groups = two_sided_generators(small, [2, 2])
for k, g in enumerate(groups, 1):
    print(f"L{k}: {len(g)} minors")
G = [expand_minor(m) for g in groups for m in g]
order = TermOrder.scanning("NWE", 5)
print(is_groebner(G, order), is_reduced_gb(G, order))

# %%
# When two pieces ask for the same size, a minor in their overlap must be
# kept by one of them.  The verbatim caps drop it from both.

tie = Ladder(((4, 5),), ((1, 4), (2, 2)))
keep = {m for g in two_sided_generators(tie, [2, 2]) for m in g}
verbatim = {m for g in two_sided_generators(tie, [2, 2], literal=True) for m in g}
print(sorted(map(str, keep - verbatim)))

# %%
# One-sided ladders and vexillary permutations
# --------------------------------------------
# Rectangles ``X[a_i, b_i]`` with sizes ``r_i`` correspond to a unique
# vexillary permutation with those essential boxes.

spec = one_sided_ideal([2, 4], [4, 2], [1, 2])
w = ladder_to_vexillary(spec)
print(w, vexillary_to_ladder(w))
print(criterion_attend_or_lcm(spec, TermOrder.scanning("NWE", 4)))
