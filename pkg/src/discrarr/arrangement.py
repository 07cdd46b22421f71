"""Central (multi)arrangements of hyperplanes given by normal covectors.

An arrangement is an ordered multiset of n nonzero covectors in K^k;
repeated or parallel covectors are allowed.  Indices are 1-based
throughout, so the ground set is {1, .., n}.  All values are immutable
and every operation is a pure function.
"""

import itertools
import json
import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (Matrix, det, dot, kernel_basis, parse_scalar, rank,
                     rref, scalar_str)

log = logging.getLogger(__name__)


class RetryBudgetExceeded(RuntimeError):
    """A seeded sampler ran out of retries."""


@dataclass(frozen=True)
class Arrangement:
    k: int
    normals: tuple  # tuple of k-tuples of field scalars

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("ambient rank k must be at least 1")
        object.__setattr__(self, "normals", tuple(tuple(v) for v in self.normals))
        for v in self.normals:
            if len(v) != self.k:
                raise ValueError("normal of wrong length")
            if not any(v):
                raise ValueError("zero normal covector is not allowed")

    @property
    def n(self) -> int:
        return len(self.normals)

    def normal(self, i: int) -> tuple:
        """The i-th normal, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range 1..{self.n}")
        return self.normals[i - 1]

    def column_stack(self, indices=None) -> Matrix:
        """k x |indices| matrix whose columns are the chosen normals."""
        if indices is None:
            indices = range(1, self.n + 1)
        return Matrix.from_cols([self.normal(i) for i in sorted(indices)])

    @property
    def essential(self) -> bool:
        return self.n > 0 and rank(self.column_stack()) == self.k

    def to_json_dict(self) -> dict:
        return {"k": self.k,
                "normals": [[scalar_str(x) for x in v] for v in self.normals]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "Arrangement":
        return cls(int(d["k"]),
                   tuple(tuple(parse_scalar(x) for x in v) for v in d["normals"]))


def from_int_columns(k: int, cols) -> Arrangement:
    """Arrangement from integer column entries (convenience constructor)."""
    return Arrangement(k, tuple(tuple(Fraction(x) for x in c) for c in cols))


def load_arrangement(path: str) -> Arrangement:
    with open(path, "r", encoding="utf-8") as fh:
        return Arrangement.from_json_dict(json.load(fh))


def save_arrangement(a: Arrangement, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(a.to_json_dict(), fh, indent=1)
        fh.write("\n")


def circuits(a: Arrangement) -> frozenset:
    """All circuits: minimal linearly dependent index sets.

    Sizes run from 2 (parallel pairs) to k+1; anything larger contains a
    dependent (k+1)-subset and is therefore never minimal.
    """
    found: list = []
    ground = range(1, a.n + 1)
    for size in range(2, min(a.k + 1, a.n) + 1):
        for comb in itertools.combinations(ground, size):
            s = frozenset(comb)
            if any(c <= s for c in found):
                continue
            if rank(a.column_stack(comb)) < size:
                found.append(s)
    return frozenset(found)


def is_generic(a: Arrangement) -> bool:
    """True iff every circuit has size exactly k+1.

    Equivalently, every subset of min(n, k) normals is independent.
    """
    size = min(a.k, a.n)
    for comb in itertools.combinations(range(1, a.n + 1), size):
        if rank(a.column_stack(comb)) < size:
            return False
    return True


def pair_det(a: Arrangement, i: int, j: int):
    """det(a_i, a_j) for a rank-2 arrangement; antisymmetric in (i, j)."""
    if a.k != 2:
        raise ValueError("pair_det needs k = 2; use maximal_minor for general k")
    ai, aj = a.normal(i), a.normal(j)
    return ai[0] * aj[1] - ai[1] * aj[0]


def maximal_minor(a: Arrangement, s):
    """det of the k x k column submatrix indexed by s, columns in increasing order."""
    s = sorted(set(s))
    if len(s) != a.k:
        raise ValueError(f"need exactly k = {a.k} distinct indices, got {len(s)}")
    return det(a.column_stack(s))


def parallel(a: Arrangement, i: int, j: int) -> bool:
    return rank(a.column_stack([i, j])) <= 1


def delete(a: Arrangement, i: int) -> Arrangement:
    """Remove the i-th hyperplane; remaining indices close ranks."""
    if not 1 <= i <= a.n:
        raise IndexError(f"index {i} out of range 1..{a.n}")
    return Arrangement(a.k, a.normals[:i - 1] + a.normals[i:])


def restrict(a: Arrangement, i: int) -> Arrangement:
    """Restrict to the i-th hyperplane.

    Picks the reduced echelon basis of ker(a_i) and expresses every other
    normal inside that basis, giving a rank-(k-1) multiarrangement.  The
    result is well defined up to linear equivalence; the deterministic
    basis choice keeps runs reproducible.
    """
    if a.k < 2:
        raise ValueError("cannot restrict a rank-1 arrangement")
    if not 1 <= i <= a.n:
        raise IndexError(f"index {i} out of range 1..{a.n}")
    for j in range(1, a.n + 1):
        if j != i and parallel(a, i, j):
            raise ValueError(
                f"hyperplane {j} coincides with {i}; restriction would drop it")
    basis = kernel_basis(Matrix.from_rows([a.normal(i)]))
    new = tuple(tuple(dot(a.normal(j), b) for b in basis)
                for j in range(1, a.n + 1) if j != i)
    return Arrangement(a.k - 1, new)


def normal_form(a: Arrangement) -> Arrangement:
    """Canonical representative of the linear-equivalence class.

    For a generic essential arrangement: identity block in columns 1..k,
    all-ones column k+1, and ones across the last row from column k+1 on.
    Idempotent.
    """
    if not a.essential or not is_generic(a):
        raise ValueError("normal form requires a generic essential arrangement")
    k, n = a.k, a.n
    aug = Matrix.from_rows(
        [[a.normals[c][r] for c in range(k)] + [a.normals[c][r] for c in range(n)]
         for r in range(k)])
    red, pivots = rref(aug)
    assert pivots == list(range(k))
    cols = [[red[r][k + c] for r in range(k)] for c in range(n)]
    if n > k:
        beta = [cols[k][r] for r in range(k)]
        assert all(beta), "genericity guarantees nonzero entries here"
        for c in range(n):
            cols[c] = [x / beta[r] for r, x in enumerate(cols[c])]
        for c in range(k):
            cols[c] = [x * beta[c] for x in cols[c]]
        for c in range(k + 1, n):
            last = cols[c][k - 1]
            assert last, "genericity guarantees a nonzero last entry"
            cols[c] = [x / last for x in cols[c]]
    return Arrangement(k, tuple(tuple(c) for c in cols))


def random_generic(n: int, k: int, seed: int, height: int = 9,
                   budget: int = 512) -> Arrangement:
    """Seeded generic arrangement with integer entries in [-height, height].

    Deterministic for a fixed seed.  Resamples until generic; raises
    RetryBudgetExceeded when the budget runs out (height too small).
    """
    if k < 1 or n < k:
        raise ValueError(f"need n >= k >= 1 for an essential sample, got ({n}, {k})")
    if height < 1:
        raise ValueError("height must be at least 1")
    rng = random.Random(seed)
    for attempt in range(budget):
        cols = []
        for _ in range(n):
            v = tuple(Fraction(rng.randint(-height, height)) for _ in range(k))
            cols.append(v)
        if any(not any(v) for v in cols):
            continue
        a = Arrangement(k, tuple(cols))
        if is_generic(a):
            log.debug("random_generic(n=%d, k=%d, seed=%d): %d resamples",
                      n, k, seed, attempt)
            return a
    raise RetryBudgetExceeded(
        f"no generic sample in {budget} draws (n={n}, k={k}, height={height})")


def permuted(a: Arrangement, sigma) -> Arrangement:
    """Relabel hyperplanes: result.normal(sigma[i]) == a.normal(i), 1-based.

    sigma is a dict {i: image} or a sequence whose (i-1)-th entry is the
    image of i.
    """
    if not isinstance(sigma, dict):
        sigma = {i + 1: s for i, s in enumerate(sigma)}
    if sorted(sigma) != list(range(1, a.n + 1)) or sorted(sigma.values()) != list(range(1, a.n + 1)):
        raise ValueError("sigma must be a bijection on the ground set")
    new = [None] * a.n
    for i in range(1, a.n + 1):
        new[sigma[i] - 1] = a.normal(i)
    return Arrangement(a.k, tuple(new))


def scaled(a: Arrangement, i: int, c) -> Arrangement:
    """Multiply the i-th normal by a nonzero scalar."""
    if not c:
        raise ValueError("scale factor must be nonzero")
    new = list(a.normals)
    new[i - 1] = tuple(c * x for x in new[i - 1])
    return Arrangement(a.k, tuple(new))


def transformed(a: Arrangement, m: Matrix) -> Arrangement:
    """Apply an invertible k x k matrix to every normal."""
    if m.nrows != a.k or m.ncols != a.k or not det(m):
        raise ValueError("need an invertible k x k matrix")
    new = tuple(tuple(dot(m.row(r), v) for r in range(a.k)) for v in a.normals)
    return Arrangement(a.k, new)
