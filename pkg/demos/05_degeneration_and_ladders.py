"""Degeneration: merging an index into a parallel partner.

Combinatorially, replacing the top index by a smaller one and closing up
gives a family on one fewer line.  Geometrically, an arrangement on a
wheel variety that carries the matching parallel copy drops into the
merged variety when the copy is deleted.  Ladders are what wheels
degenerate into when the hubs collapse to two poles.
"""

from discrarr import (degenerate, expected_rank, format_family, ladder,
                      ladder_poly, membership, presentation, solve_on_variety,
                      wheel)
from discrarr.presentations import check_bba

seven = presentation(7, 2, [{1, 2, 3}, {1, 4, 7}, {1, 5, 6}, {2, 4, 6}, {3, 5, 7}])
merged, gamma = degenerate(seven, 7, 4)
print("seven-line family:", format_family(seven))
print("merging 7 into 4:", format_family(merged), f" gamma={gamma}")
print()

w8 = wheel(8)
merged8, g8 = degenerate(w8, 8, 4)
print("eight-line wheel:", format_family(w8))
print("merging 8 into 4:", format_family(merged8), f" gamma={g8}")
print()

l8 = ladder(8)
print("eight-line ladder:", format_family(l8))
print("passes the union-count condition?", check_bba(l8).ok,
      " expected rank", expected_rank(l8))
a = solve_on_variety("L8", seed=2)
print("on-variety sample: equation value", ladder_poly(a, 3))
print("membership with bound 5:", membership(a, l8, 5))
