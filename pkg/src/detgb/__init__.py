"""Groebner bases of Schubert, ladder and blockwise determinantal ideals.

The fast path is integer combinatorics on minors (essential sets, elusive
minors, removed terms); :mod:`detgb.oracle` re-derives the same objects by
classical polynomial division for cross-checking.
"""

from .block import Block, check_diagonality
from .blockwise import (BlockwiseIdealSpec, CornerOrderError, CriterionResult, Ladder,
                        LadderError, RankGapError, block_minors, criterion_attend_or_lcm,
                        criterion_disjoint_blocks, criterion_disjoint_leading_vars,
                        criterion_fewer_rows, criterion_rowcolumn, ladder_to_vexillary,
                        one_sided_ideal, two_sided_generators, two_sided_spec,
                        vexillary_to_ladder)
from .minor_term import (BlockKindError, Minor, complement, contains, divisible_by_block_minor,
                         exhaustive_divisor_search, expand_minor, find_divisor_minor,
                         leading_term, term_intersect_block, term_length)
from .oracle import (ScaleError, inter_reduce, is_groebner, is_minimal_gb, is_reduced_gb,
                     laplace_expand, normal_form, reduce_once, s_polynomial)
from .permutation import (EssentialBox, Permutation, essential_set, is_vexillary,
                          parse_permutation, rank_nw, rothe_diagram)
from .polynomial import Polynomial, parse_polynomial
from .schubert import (FultonGenerator, ReducedBasisElement, UnsupportedOrderError, attends,
                       corner_minor, elusive_minors, fulton_generators, order_r_compare,
                       reduce_elusive, reduced_gb_schubert, rterm, rterm_set)
from .term_order import TermOrder, check_corner_property, parse_order
from .trichar import (TriangularSet, initial_of, is_normal, normality_violations,
                      strong_pair_partial_check, w_characteristic_set)

__version__ = "0.1.0"
