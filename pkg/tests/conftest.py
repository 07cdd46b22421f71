import itertools
from fractions import Fraction as F

import pytest

from discrarr.arrangement import Arrangement, from_int_columns


def crapo_arrangement(lam) -> Arrangement:
    """The classical six-line family with one rational parameter."""
    lam = F(lam)
    return Arrangement(2, (
        (F(1), F(0)), (F(2), F(1)), (F(1), F(1)),
        (F(1), F(2)), (F(0), F(1)), (lam, F(1))))


@pytest.fixture
def crapo():
    return crapo_arrangement


@pytest.fixture
def parallel_multi():
    # rank-2 multiarrangement with one parallel pair
    return from_int_columns(2, [(1, 0), (2, 0), (0, 1), (1, 1)])


@pytest.fixture
def ten_line():
    cols = list(zip(
        [0, 20, 2, 3, 0, 1, 1, 4, 314, 139],
        [10, 0, -3, 1, 0, -1, 2, -1, -40, 30],
        [3, -9, 0, 0, 1, 1, 2, -3, -197, -43]))
    return from_int_columns(3, cols)


TEN_LINE_FAMILY = [{1, 2, 3, 4}, {1, 5, 6, 7}, {2, 5, 8, 9}, {3, 6, 8, 10},
                   {4, 7, 9, 10}]


@pytest.fixture
def nine_line():
    return from_int_columns(2, [(i - 5, 1) for i in range(1, 10)])


# independent oracles: cofactor determinants, minor ranks, brute circuits

def det_oracle(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return F(1)
    if n == 1:
        return rows[0][0]
    acc = F(0)
    sign = F(1)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        acc += sign * rows[0][j] * det_oracle(minor)
        sign = -sign
    return acc


def rank_oracle(rows):
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    best = 0
    for size in range(1, min(nr, nc) + 1):
        hit = False
        for ri in itertools.combinations(range(nr), size):
            for ci in itertools.combinations(range(nc), size):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det_oracle(sub):
                    hit = True
                    break
            if hit:
                break
        if not hit:
            break
        best = size
    return best


def circuits_oracle(a: Arrangement):
    cols = {i: a.normal(i) for i in range(1, a.n + 1)}

    def dependent(idx):
        rows = [[cols[i][r] for i in idx] for r in range(a.k)]
        return rank_oracle(rows) < len(idx)

    out = []
    for size in range(2, min(a.k + 1, a.n) + 1):
        for comb in itertools.combinations(range(1, a.n + 1), size):
            s = frozenset(comb)
            if any(c < s for c in out):
                continue
            if dependent(comb):
                out.append(s)
    return frozenset(out)


def random_admissible_family(rng, n, k, max_members=3):
    """Random antichain with member sizes in [k+1, k+2] and small overlaps."""
    for _ in range(200):
        members = []
        target = rng.randint(1, max_members)
        tries = 0
        while len(members) < target and tries < 50:
            tries += 1
            size = rng.randint(k + 1, min(n, k + 2))
            cand = frozenset(rng.sample(range(1, n + 1), size))
            if any(len(cand & m) >= k or cand <= m or m <= cand for m in members):
                continue
            members.append(cand)
        if members:
            return members
    raise RuntimeError("could not draw a family")
