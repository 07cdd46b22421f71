"""Wheel families: a closed product equation detects the rank drop.

For 2n lines in the plane, the cyclic family of rim triples plus the even
hub set loses one rank exactly when a difference of two determinant
products vanishes.  Sampling on and off that hypersurface shows both
directions, and the odd-rim twin always agrees.
"""

from discrarr import (WheelLabeling, intersection_rank, membership,
                      random_generic, solve_on_variety, twin_wheel, wheel,
                      wheel_poly)

for n in (3, 4):
    m = 2 * n
    lab = WheelLabeling(tuple(range(1, m, 2)), tuple(range(2, m + 1, 2)))
    on = solve_on_variety(f"W{m}", seed=7)
    off = random_generic(m, 2, seed=11)
    print(f"{m} lines:")
    print("  on-variety sample: equation", wheel_poly(on, lab),
          " rank", intersection_rank(on, wheel(m)), f"(expected {m - 3})")
    print("  generic sample:    equation", wheel_poly(off, lab),
          " rank", intersection_rank(off, wheel(m)), f"(expected {m - 2})")
    r = m - 3
    print("  twin agreement on both:",
          membership(on, wheel(m), r).member == membership(on, twin_wheel(m), r).member,
          membership(off, wheel(m), r).member == membership(off, twin_wheel(m), r).member)
    print()
