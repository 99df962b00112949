"""
Reduced bases of Schubert determinantal ideals
==============================================

Start from a permutation, read off its Rothe diagram and essential set,
collect the elusive minors and delete the removable terms.  The result is
checked against plain division at the end.
"""

# %%
# A small non-vexillary permutation
# ---------------------------------
# ``2143`` has two essential boxes.  The 3-minor of the top left 3x3 corner
# contains the variable ``x[1,1]``, which already lies in the ideal.

from detgb import (
    TermOrder, elusive_minors, essential_set, expand_minor, inter_reduce, is_minimal_gb,
    is_reduced_gb, parse_permutation, reduced_gb_schubert,
)
from detgb.cli import _rothe_text
from detgb.schubert import schubert_stats

w = parse_permutation("2143")
print(_rothe_text(w))
print(essential_set(w))

order = TermOrder.scanning("NEW", w.n)
elusive = [expand_minor(g.minor) for g in elusive_minors(w)]
print("minimal:", is_minimal_gb(elusive, order, verify=True))
print("reduced:", is_reduced_gb(elusive, order))

# %%
# Two of the six terms of the 3-minor are multiples of ``x[1,1]``.  Deleting
# them gives the reduced basis directly, with no polynomial division.

for e in reduced_gb_schubert(w, order):
    print(f"{e.poly.format(order)}    (removed {e.removed})")

# %%
# Division agrees
# ---------------
# Inter-reducing the elusive minors by ordinary division gives the same basis.

formula = {e.poly for e in reduced_gb_schubert(w, order)}
print(formula == set(inter_reduce(elusive, order)))

# %%
# A larger case
# -------------
# A permutation of size 10 with six essential boxes.  Its elusive minors
# number 91.  The reduced basis still comes from term deletion alone.

big = parse_permutation("[1,9,4,2,7,6,3,5,10,8]")
basis = reduced_gb_schubert(big, TermOrder.scanning("NEW", big.n))
for key, value in schubert_stats(big, basis).items():
    print(f"{key:>16}: {value}")
