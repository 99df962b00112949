"""
Triangular sets from reduced bases
==================================

Under a lexicographic order every basis element has a greatest variable.
Keep the smallest element for each such variable and you get a triangular
set.  For vexillary permutations its initials avoid every leading variable.
"""

# %%
from detgb import (
    TermOrder, is_normal, normality_violations, parse_permutation, reduced_gb_schubert,
    strong_pair_partial_check, w_characteristic_set,
)
from detgb.permutation import all_permutations, is_vexillary


def char_set(w, variant="NEW"):
    order = TermOrder.scanning(variant, w.n)
    G = [e.poly for e in reduced_gb_schubert(w, order)]
    return G, w_characteristic_set(G, order), order


vex = [w for w in all_permutations(5) if is_vexillary(w) and not w.is_identity()]
print(len(vex), all(is_normal(char_set(w)[1]) for w in vex))

# %%
# ``1453276`` is not vexillary.  The 6-minor's reduction has leading
# variable ``x[1,6]``, and its initial involves ``x[3,2]``, which is itself
# the leading variable of a 2-minor in the set.

G, C, order = char_set(parse_permutation("1453276"))
for p, v in zip(C, C.leading_variables):
    print(v, len(p))
print(normality_violations(C))

# %%
# No initial lies in the ideal, even here.

print(strong_pair_partial_check(G, C))
