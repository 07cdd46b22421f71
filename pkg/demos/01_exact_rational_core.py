"""Exact rational linear algebra: ranks, kernels, determinants, solving.

Everything below is computed over the rationals with no rounding, so a
rank is a theorem about the input, not an estimate.
"""

from fractions import Fraction as F

from discrarr import Matrix, PrimeField, det, kernel_basis, rank, solve
from discrarr.linalg import matrix_to_field

# A parametrized stack of four covectors in Q^6.  At lam = -1 one of them
# becomes a combination of the other three; at any other admissible value
# the four are independent.


def stack(lam):
    lam = F(lam)
    return Matrix.from_rows([
        (1, -1, 1, 0, 0, 0),
        (-lam, 0, 0, 0, -1, 1),
        (0, 1 - 2 * lam, 0, lam - 2, 0, 3),
        (0, 0, 1, -1, 1, 0),
    ])


for lam in (-1, 3):
    m = stack(lam)
    print(f"lam = {lam}:  rank {rank(m)},  kernel dimension {len(kernel_basis(m))}")

print()
print("determinant of [[1,0],[2,1]]:", det(Matrix.from_rows([(F(1), F(0)), (F(2), F(1))])))

m = Matrix.from_rows([(F(1), F(1))])
print("one equation, two unknowns, rhs 2:", solve(m, [F(2)]))
print("inconsistent 0*x = 1:", solve(Matrix.from_rows([(F(0), F(0))]), [F(1)]))

# The same ranks survive reduction modulo a large prime, which is the
# cheap screen used before an exact verdict is trusted.
fp = PrimeField(1299709)
for lam in (-1, 3):
    print(f"lam = {lam}: rank over F_p = {rank(matrix_to_field(stack(lam), fp))}")
