"""
Divisibility by a minor inside a block
======================================

Whether some r-minor lying in a block has a leading term dividing a given
term comes down to the longest monotone run of the term's columns.  This
holds when the block is closed under northwest/southeast rectangles.
"""

# %%
from detgb import Block, exhaustive_divisor_search, find_divisor_minor, term_length

t = ((5, 2), (7, 4), (8, 8), (10, 10), (12, 6))


def rows_block(spec):
    return Block((i, j) for r1, r2, c1, c2 in spec
                 for i in range(r1, r2 + 1) for j in range(c1, c2 + 1))


B1 = rows_block([(1, 2, 8, 17), (3, 3, 4, 17), (4, 7, 4, 15), (8, 14, 1, 15)])
B2 = rows_block([(1, 2, 8, 17), (3, 3, 4, 17), (4, 7, 4, 13), (8, 9, 1, 15), (10, 14, 6, 15)])
print(B1.render(14, 17))

# %%
# In ``B1`` the columns of ``t`` that fall inside the block read 4, 8, 10, 6.
# The longest increasing run has length 3, and its cells span a 3-minor.

print(B1.diagonality(), term_length(t, B1, "diagonal"))
print(find_divisor_minor(t, B1, 3, "diagonal"))

# %%
# ``B2`` has a notch in rows 10-14, so it is not diagonal and the length test
# is refused.  The brute-force search confirms that no 3-minor of ``B2``
# works, although ``t`` still has an increasing run of length 3 there.

print(B2.diagonality())
print(exhaustive_divisor_search(t, B2, 3, "diagonal"))
