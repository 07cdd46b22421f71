"""Exact linear algebra over the rationals and over prime fields.

Scalars are ``fractions.Fraction`` (always reduced, positive denominator,
arbitrary-precision integers) or :class:`FpElement` for a prime field used
as a fast randomized screen.  Both support field arithmetic through the
usual operators, so every routine below is field agnostic.  There is no
tolerance anywhere: a pivot is zero exactly when it equals the field zero.

Matrices are dense and tiny (desk scale, at most a few hundred entries),
so plain Gaussian elimination over the field is the whole story.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

Scalar = Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, exact for every m < 3.3e24."""
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


class FpElement:
    """An element of Z/pZ with field arithmetic via operator overloading."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            return FpElement(other.numerator, self.p) / FpElement(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else FpElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return FpElement(self.v * pow(o.v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else o / self

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class PrimeField:
    """Factory for FpElement values; p must be an odd prime."""

    def __init__(self, p: int):
        if not is_prime(p) or p == 2:
            raise ValueError(f"{p} is not an odd prime")
        self.p = p

    def __call__(self, x) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("mixed prime fields")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes in this field")
            return FpElement(x.numerator, self.p) / FpElement(x.denominator, self.p)
        return FpElement(int(x), self.p)

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"


# A comfortable default for screening; any prime > 2**20 will do.
DEFAULT_SCREEN_PRIME = 1299709


def parse_scalar(s: str) -> Fraction:
    """Parse 'p/q' or 'p' (base 10, sign on the numerator)."""
    return Fraction(s.strip())


def scalar_str(x) -> str:
    """Canonical form: 'p/q', or just 'p' when the denominator is 1."""
    if isinstance(x, FpElement):
        return str(x.v)
    return str(Fraction(x))


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over an exact field."""

    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [tuple(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, tuple(x for r in rows for x in r))

    @classmethod
    def from_cols(cls, cols) -> "Matrix":
        cols = [tuple(c) for c in cols]
        nc = len(cols)
        nr = len(cols[0]) if cols else 0
        if any(len(c) != nr for c in cols):
            raise ValueError("ragged columns")
        return cls(nr, nc, tuple(cols[j][i] for i in range(nr) for j in range(nc)))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def at(self, i: int, j: int):
        return self.entries[i * self.ncols + j]

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows,
                      tuple(self.at(i, j) for j in range(self.ncols) for i in range(self.nrows)))

    def _one(self):
        for x in self.entries:
            if isinstance(x, FpElement):
                return FpElement(1, x.p)
            break
        return Fraction(1)


def rref(m: Matrix):
    """Reduced row echelon form.  Returns (rows as lists, pivot columns)."""
    rows = m.rows()
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix):
    """Basis of the right kernel {x : m.x = 0}.

    One vector per free column, with entry 1 in the free position.  The
    basis has exactly ncols - rank(m) vectors.
    """
    red, pivots = rref(m)
    one = m._one()
    zero = one - one
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(tuple(v))
    return basis


def det(m: Matrix):
    """Exact determinant; the input must be square."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    rows = m.rows()
    one = m._one()
    sign = one
    acc = one
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return one - one
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        pv = rows[c][c]
        acc = acc * pv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / pv
                ri, rc = rows[i], rows[c]
                rows[i] = [a - f * b for a, b in zip(ri, rc)]
    return sign * acc


def solve(m: Matrix, b):
    """One exact solution of m.x = b, or None when inconsistent."""
    b = tuple(b)
    if len(b) != m.nrows:
        raise ValueError("right-hand side length does not match rows")
    if m.nrows == 0:
        return tuple(Fraction(0) for _ in range(m.ncols))
    aug = Matrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.nrows)])
    red, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    one = aug._one()
    zero = one - one
    x = [zero] * m.ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][m.ncols]
    return tuple(x)


def dot(u, v):
    acc = None
    for a, b in zip(u, v):
        acc = a * b if acc is None else acc + a * b
    return Fraction(0) if acc is None else acc


def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return Matrix(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))


def matrix_to_field(m: Matrix, field: PrimeField) -> Matrix:
    return Matrix(m.nrows, m.ncols, tuple(field(x) for x in m.entries))


def random_invertible(k: int, rng, height: int = 5) -> Matrix:
    """Seeded random invertible k x k rational matrix (test helper)."""
    while True:
        m = Matrix(k, k, tuple(Fraction(rng.randint(-height, height))
                               for _ in range(k * k)))
        if det(m):
            return m


def all_minors_rank(m: Matrix) -> int:
    """Rank via brute-force minor expansion.  Exponential; oracle use only."""
    r = 0
    for size in range(1, min(m.nrows, m.ncols) + 1):
        found = False
        for ri in itertools.combinations(range(m.nrows), size):
            for ci in itertools.combinations(range(m.ncols), size):
                sub = Matrix.from_rows([[m.at(i, j) for j in ci] for i in ri])
                if det(sub):
                    found = True
                    break
            if found:
                break
        if found:
            r = size
        else:
            break
    return r
