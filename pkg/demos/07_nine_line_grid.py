"""Nine lines with slopes in arithmetic progression: a three-by-three grid
of triple points in every translated picture that realizes it.

The row-and-column family of six triples drops to rank 5 (expected 6),
every one-line-deleted subfamily is tight at 4, and the configuration
sits on fifteen further wheel-type varieties at once.
"""

from discrarr import (from_int_columns, intersection_rank, membership,
                      presentation, wheel_labeling_of, wheel_poly)
from discrarr.presentations import check_bba, expected_rank, min_expected_rank_above

nine = from_int_columns(2, [(i - 5, 1) for i in range(1, 10)])
GRID = [{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9}]
p0 = presentation(9, 2, GRID)

print("rank of the grid family:", intersection_rank(nine, p0),
      " expected rank:", expected_rank(p0))
print("passes the union-count condition:", check_bba(p0).ok)
print("least expected rank strictly above:", min_expected_rank_above(p0))
for i in (1, 5, 9):
    sub = [s for s in GRID if i not in s]
    print(f"  drop line {i}: rank", intersection_rank(nine, sub))
print()

count = 0
for extra in ("159", "168", "249", "267", "348", "357"):
    fam = presentation(9, 2, GRID + [set(int(c) for c in extra)])
    v = membership(nine, fam)
    lab = wheel_labeling_of(fam)
    eq = wheel_poly(nine, lab, plain=False)
    count += v.member and eq == 0
    print(f"completion {extra}: member={v.member} (rank {v.rank_certificate}"
          f" <= {v.r}), wheel equation value {eq}")
print(f"{count}/6 diagonal completions are genuine merged twelve-wheels")
