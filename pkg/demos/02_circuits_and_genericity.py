"""Arrangements, circuits, genericity, deletion and restriction.

An arrangement is an ordered multiset of nonzero normal covectors; its
circuits are the minimal dependent index sets.  Generic means every
circuit is as large as the rank allows.
"""

from discrarr import (circuits, delete, from_int_columns, is_generic,
                      maximal_minor, normal_form, pair_det, random_generic,
                      restrict)

multi = from_int_columns(2, [(1, 0), (2, 0), (0, 1), (1, 1)])
print("normals:", multi.normals)
print("circuits:", sorted(sorted(c) for c in circuits(multi)))
print("generic?", is_generic(multi), " (the first two lines are parallel)")
print()

a = random_generic(6, 2, seed=42)
print("a seeded generic arrangement on 6 lines:")
print("  every pair independent:",
      all(pair_det(a, i, j) != 0 for i in range(1, 7) for j in range(i + 1, 7)))
print("  circuits are exactly the triples:",
      sorted(len(c) for c in circuits(a)) == [3] * 20)
print("  a maximal minor:", maximal_minor(a, {1, 2}))
print()

print("deleting line 2 of the multiarrangement leaves circuits",
      sorted(sorted(c) for c in circuits(delete(multi, 2))))
r = restrict(multi, 3)
print("restricting to line 3 gives the rank-1 multiset", r.normals)
print()

nf = normal_form(a)
print("normal form first three columns:", nf.normals[:3])
print("circuits preserved:", circuits(nf) == circuits(a))
