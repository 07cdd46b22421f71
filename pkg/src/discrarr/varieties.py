"""Rank-drop varieties of arrangements, their product equations, and the
desk-scale classification of minimal rank-drop presentations.

An arrangement belongs to the variety of a family (T, r) when the joint
dependency span of T has rank at most r.  For wheel- and ladder-shaped
families of triples in the plane, membership is cut out by a single
difference of two products of 2x2 determinants; those polynomials are
evaluated literally here, and solved for one normal to manufacture
on-variety witnesses.
"""

import functools
import itertools
import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import (Arrangement, RetryBudgetExceeded, is_generic,
                          pair_det, parallel)
from .discriminantal import dependency_space, intersection_rank
from .linalg import DEFAULT_SCREEN_PRIME, FpElement
from .presentations import (Presentation, check_bba, degenerate,
                            expected_rank, format_family, is_admissible,
                            ladder, min_expected_rank_above, orbit_canonical,
                            permute, presentation, wheel)


def field_name(a: Arrangement) -> str:
    for v in a.normals:
        for x in v:
            if isinstance(x, FpElement):
                return f"F{x.p}"
    return "Q"


def _pmap(fn, items):
    workers = int(os.environ.get("DISCRARR_THREADS", "1") or "1")
    items = list(items)
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    rank_certificate: int
    r: int
    field: str


@functools.lru_cache(maxsize=4096)
def _cached_threshold(canonical: tuple, n: int, k: int):
    members = [frozenset(s) for s in canonical]
    return min_expected_rank_above(Presentation(n, k, frozenset(members)))


def default_r(p: Presentation):
    """The conventional rank bound for a family named without an explicit r:
    one less than the smallest expected rank strictly above it."""
    m = _cached_threshold(p.canonical(), p.n, p.k)
    return None if m is None else m - 1


def membership(a: Arrangement, p: Presentation, r: int | None = None) -> MembershipVerdict:
    """Does the joint dependency span of p have rank at most r on a?

    With r omitted, the conventional bound from default_r is used and the
    verdict records which r was applied.
    """
    if p.n != a.n or p.k != a.k:
        p = p.with_ground(a.n)
        if p.k != a.k:
            raise ValueError("presentation context does not match the arrangement")
    if r is None:
        r = default_r(p)
        if r is None:
            raise ValueError("family has no strict upper bound; give r explicitly")
    cert = intersection_rank(a, p)
    return MembershipVerdict(cert <= r, cert, r, field_name(a))


@dataclass(frozen=True)
class WheelLabeling:
    """Rim indices in cyclic order and one hub index per rim edge.

    Rim entries are pairwise distinct; hubs may repeat (a merged wheel).
    """
    rim: tuple
    hubs: tuple

    def __post_init__(self):
        if len(self.rim) != len(self.hubs):
            raise ValueError("rim and hub lists must have equal length")
        if len(self.rim) < 3:
            raise ValueError("need at least 3 rim indices")
        if len(set(self.rim)) != len(self.rim):
            raise ValueError("rim indices must be pairwise distinct")


def _product(a: Arrangement, pairs) -> Fraction:
    acc = None
    for i, j in pairs:
        d = pair_det(a, i, j)
        acc = d if acc is None else acc * d
    return acc


def _wheel_factors(lab: WheelLabeling):
    m = len(lab.rim)
    left = [(lab.hubs[l], lab.rim[l]) for l in range(m)]
    right = [(lab.hubs[l], lab.rim[(l + 1) % m]) for l in range(m)]
    return left, right


def wheel_poly(a: Arrangement, lab: WheelLabeling, plain: bool = True):
    """Difference of hub-rim determinant products around the wheel.

    Vanishes exactly when some translation makes every rim edge triple and
    the hub set concurrent.  With plain=True the adjacent hyperplanes of
    the interleaved rim/hub cycle must be distinct (non-parallel), which
    is what the closed product formula needs.
    """
    if a.k != 2:
        raise ValueError("wheel products need k = 2")
    m = len(lab.rim)
    if plain:
        seq = []
        for l in range(m):
            seq.append(lab.rim[l])
            seq.append(lab.hubs[l])
        for t in range(2 * m):
            for step in (1, 2):
                u, v = seq[t], seq[(t + step) % (2 * m)]
                if u != v and parallel(a, u, v):
                    raise ValueError(
                        f"hyperplanes {u} and {v} coincide; wheel products need "
                        "distinct neighbours around the cycle")
    left, right = _wheel_factors(lab)
    return _product(a, left) - _product(a, right)


def _ladder_factors(m: int):
    half = (m - 2) // 2
    left = [(2 * i, m) for i in range(1, half + 1)] + \
           [(2 * i - 1, m - 1) for i in range(1, half + 1)]
    right = [(2 * i, m - 1) for i in range(1, half + 1)] + \
            [(2 * i - 1, m) for i in range(1, half + 1)]
    return left, right


def ladder_poly(a: Arrangement, nrungs: int):
    """Pole-against-pole determinant products for the ladder on 2*nrungs+2
    lines; vanishes exactly on the ladder variety."""
    if a.k != 2:
        raise ValueError("ladder products need k = 2")
    m = 2 * nrungs + 2
    if a.n != m:
        raise ValueError(f"ladder on {m} lines, arrangement has {a.n}")
    left, right = _ladder_factors(m)
    return _product(a, left) - _product(a, right)


def crapo_poly(a: Arrangement, labels=(1, 2, 3, 4, 5, 6)):
    """The classical six-line quartic (or its seven-line quintic variant).

    Six labels l1..l6: D(l1,l6) D(l2,l4) D(l3,l5) - D(l1,l5) D(l2,l6) D(l3,l4).
    Seven labels add the extra line in the quintic pattern.
    """
    if a.k != 2:
        raise ValueError("needs k = 2")
    l = tuple(labels)
    if len(l) == 6:
        left = [(l[0], l[5]), (l[1], l[3]), (l[2], l[4])]
        right = [(l[0], l[4]), (l[1], l[5]), (l[2], l[3])]
    elif len(l) == 7:
        left = [(l[0], l[3]), (l[0], l[5]), (l[1], l[6]), (l[2], l[4])]
        right = [(l[0], l[6]), (l[0], l[4]), (l[1], l[5]), (l[2], l[3])]
    else:
        raise ValueError("need 6 or 7 labels")
    return _product(a, left) - _product(a, right)


def wheel_labeling_of(p: Presentation) -> WheelLabeling | None:
    """Detect wheel structure: rim edge triples around a cycle plus the hub
    member collecting the edge labels.  Returns None when p has no such shape."""
    for hub_member in sorted(p.members, key=lambda s: (len(s), sorted(s))):
        rest = [s for s in p.members if s != hub_member]
        if len(rest) < 3 or not all(len(s) == 3 for s in rest):
            continue
        hubset = set(hub_member)
        edges = []
        ok = True
        for s in sorted(rest, key=sorted):
            hs, rs = s & hubset, s - hubset
            if len(hs) != 1 or len(rs) != 2:
                ok = False
                break
            u, v = sorted(rs)
            edges.append((u, v, next(iter(hs))))
        if not ok or {h for _, _, h in edges} != hubset:
            continue
        adj: dict = {}
        for u, v, h in edges:
            adj.setdefault(u, []).append((v, h))
            adj.setdefault(v, []).append((u, h))
        if len(adj) != len(rest) or any(len(nb) != 2 for nb in adj.values()):
            continue
        start = min(adj)
        nxt, h0 = min(adj[start])
        rim, hubs = [start], [h0]
        prev, cur = start, nxt
        good = True
        while cur != start:
            rim.append(cur)
            options = [(w, h) for w, h in adj[cur] if w != prev]
            if len(options) != 1:
                good = False
                break
            (w, h) = options[0]
            hubs.append(h)
            prev, cur = cur, w
        if good and len(rim) == len(rest):
            return WheelLabeling(tuple(rim), tuple(hubs))
    return None


def presentation_of_labeling(lab: WheelLabeling, n: int) -> Presentation:
    m = len(lab.rim)
    members = [frozenset({lab.rim[l], lab.rim[(l + 1) % m], lab.hubs[l]})
               for l in range(m)]
    members.append(frozenset(lab.hubs))
    return presentation(n, 2, members)


@dataclass(frozen=True)
class VarietyFamily:
    """A named family with a closed product equation.

    left/right are lists of index pairs; the equation is
    prod(D(i, j) for (i, j) in left) - prod(D(i, j) for (i, j) in right).
    """
    name: str
    pres: Presentation
    left: tuple
    right: tuple

    @property
    def ground(self) -> int:
        return self.pres.n

    def poly(self, a: Arrangement, mapping=None):
        left, right = self.left, self.right
        if mapping is not None:
            left = [(mapping[i], mapping[j]) for i, j in left]
            right = [(mapping[i], mapping[j]) for i, j in right]
        return _product(a, left) - _product(a, right)

    def solve_index(self) -> int:
        """Largest index in which the equation is linear (appears exactly
        once in each product)."""
        lc = {}
        rc = {}
        for i, j in self.left:
            lc[i] = lc.get(i, 0) + 1
            lc[j] = lc.get(j, 0) + 1
        for i, j in self.right:
            rc[i] = rc.get(i, 0) + 1
            rc[j] = rc.get(j, 0) + 1
        good = [i for i in lc if lc[i] == 1 and rc.get(i, 0) == 1]
        if not good:
            raise ValueError(f"equation of {self.name} is linear in no index")
        return max(good)


def _wheel_family(name: str, pres: Presentation, lab: WheelLabeling) -> VarietyFamily:
    left, right = _wheel_factors(lab)
    return VarietyFamily(name, pres, tuple(left), tuple(right))


def wheel_family(m: int) -> VarietyFamily:
    half = m // 2
    lab = WheelLabeling(tuple(range(1, m, 2)), tuple(range(2, m + 1, 2)))
    return _wheel_family(f"W{m}", wheel(m), lab)


def ladder_family(m: int) -> VarietyFamily:
    left, right = _ladder_factors(m)
    return VarietyFamily(f"L{m}", ladder(m), tuple(left), tuple(right))


def merged_wheel_family(lab: WheelLabeling, name: str | None = None) -> VarietyFamily:
    n = max(max(lab.rim), max(lab.hubs))
    if name is None:
        name = f"DW{2 * len(lab.rim)}"
    return _wheel_family(name, presentation_of_labeling(lab, n), lab)


def _dw10_family() -> VarietyFamily:
    # ten-line wheel, indices 8 and 9 swapped, then 10 merged into 6 and
    # 9 merged into 4; the result lives on eight lines
    swapped = permute(wheel(10), {8: 9, 9: 8, **{i: i for i in (1, 2, 3, 4, 5, 6, 7, 10)}})
    step, _ = degenerate(swapped, 10, 6)
    pres, _ = degenerate(step, 9, 4)
    lab = WheelLabeling((1, 3, 5, 7, 8), (2, 4, 6, 4, 6))
    fam = _wheel_family("DW10", pres, lab)
    assert presentation_of_labeling(lab, 8).members == pres.members
    return fam


def _wd8_4_family() -> VarietyFamily:
    pres, _ = degenerate(wheel(8), 8, 4)
    lab = WheelLabeling((1, 3, 5, 7), (2, 4, 6, 4))
    assert presentation_of_labeling(lab, 7).members == pres.members
    return _wheel_family("Wd8_4", pres, lab)


@functools.lru_cache(maxsize=None)
def family_by_name(name: str) -> VarietyFamily:
    """Resolve the classification shortcuts: W6, W8, .., Wd8_4, L8, DW10."""
    if name == "Wd8_4":
        return _wd8_4_family()
    if name == "DW10":
        return _dw10_family()
    if name.startswith("W") and name[1:].isdigit():
        return wheel_family(int(name[1:]))
    if name.startswith("L") and name[1:].isdigit():
        return ladder_family(int(name[1:]))
    raise KeyError(f"unknown family name {name!r}")


def eight_line_families():
    """The five minimal families whose varieties meet spaces of eight lines."""
    return [family_by_name(n) for n in ("W6", "Wd8_4", "W8", "L8", "DW10")]


def solve_on_variety(family, seed: int, height: int = 9,
                     budget: int = 256) -> Arrangement:
    """Seeded generic arrangement lying exactly on the family's variety.

    Draws every normal but one at random, then solves the family equation
    for the remaining normal; the equation is linear homogeneous in it.
    Rechecks genericity and that the equation vanishes exactly.
    """
    if isinstance(family, str):
        family = family_by_name(family)
    elif isinstance(family, WheelLabeling):
        family = merged_wheel_family(family)
    m = family.solve_index()
    n = family.ground
    rng = random.Random(seed)
    for attempt in range(budget):
        h = height + attempt // 8
        normals = {}
        for i in range(1, n + 1):
            if i == m:
                continue
            v = (Fraction(rng.randint(-h, h)), Fraction(rng.randint(-h, h)))
            normals[i] = v
        if any(not any(v) for v in normals.values()):
            continue
        drawn = sorted(normals)
        if any(_cross(normals[i], normals[j]) == 0
               for i, j in itertools.combinations(drawn, 2)):
            continue
        cx = _eval_with(normals, m, (Fraction(1), Fraction(0)), family)
        cy = _eval_with(normals, m, (Fraction(0), Fraction(1)), family)
        if not cx and not cy:
            continue
        normals[m] = (-cy, cx)
        a = Arrangement(2, tuple(normals[i] for i in range(1, n + 1)))
        if not is_generic(a):
            continue
        value = family.poly(a)
        assert value == 0, "solved normal must lie on the variety"
        return a
    raise RetryBudgetExceeded(
        f"no on-variety sample for {family.name} in {budget} draws (seed={seed})")


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _eval_with(normals: dict, m: int, vm, family: VarietyFamily):
    table = dict(normals)
    table[m] = vm

    def prod(pairs):
        acc = Fraction(1)
        for i, j in pairs:
            acc *= _cross(table[i], table[j])
        return acc

    return prod(family.left) - prod(family.right)


@dataclass(frozen=True)
class ReportHit:
    family: str
    labels: tuple  # image of canonical index i is labels[i-1]
    r: int
    rank: int

    def to_json_dict(self) -> dict:
        return {"family": self.family, "labels": list(self.labels),
                "r": self.r, "rank": self.rank}


@dataclass(frozen=True)
class EightLineReport:
    field: str
    hits: tuple
    instances_scanned: int

    def to_json_dict(self, arrangement: str | None = None) -> dict:
        return {"arrangement": arrangement, "field": self.field,
                "instances_scanned": self.instances_scanned,
                "hits": [h.to_json_dict() for h in self.hits]}


def _distinct_relabelings(p: Presentation, n: int):
    """Yield (mapping, image family) once per distinct image of p in [n]."""
    support = sorted(p.support)
    seen = set()
    for targets in itertools.permutations(range(1, n + 1), len(support)):
        mapping = dict(zip(support, targets))
        fam = frozenset(frozenset(mapping[i] for i in s) for s in p.members)
        if fam in seen:
            continue
        seen.add(fam)
        yield mapping, fam


def eight_line_report(a: Arrangement) -> EightLineReport:
    """Scan all relabelings of the five eight-line families, evaluate each
    family equation, and certify every vanishing instance by its rank."""
    if a.n != 8 or a.k != 2:
        raise ValueError("the scan is defined for 8 lines in the plane")
    if not is_generic(a):
        raise ValueError("the scan needs a generic arrangement")

    def scan(fam: VarietyFamily):
        out = []
        count = 0
        r = default_r(fam.pres.with_ground(8))
        for mapping, image in _distinct_relabelings(fam.pres, 8):
            count += 1
            if fam.poly(a, mapping) == 0:
                cert = intersection_rank(a, image)
                labels = tuple(mapping[i] for i in sorted(fam.pres.support))
                out.append(ReportHit(fam.name, labels, r, cert))
        return out, count

    results = _pmap(scan, eight_line_families())
    hits = sorted((h for out, _ in results for h in out),
                  key=lambda h: (h.family, h.labels))
    return EightLineReport(field_name(a), tuple(hits),
                           sum(c for _, c in results))


def _size_multisets(nprime: int, nu: int):
    """Nondecreasing member sizes >= 3 with sum(size - 2) = nu and enough
    incidences to cover every one of nprime indices twice."""
    out = []

    def rec(prefix, rem, total):
        if rem == 0:
            if total >= 2 * nprime:
                out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 3
        for s in range(lo, min(nprime, rem + 2) + 1):
            rec(prefix + [s], rem - (s - 2), total + s)

    rec([], nu, 0)
    return out


def _gen_families(nprime: int, sizes: tuple):
    """All families on exactly [nprime] with the given member sizes,
    pairwise overlaps of at most one index, every index covered twice.

    Members are produced in canonical order (sizes ascending, lex within a
    size).  Only relabelings introducing new vertices in consecutive order
    are generated: the canonical representative of every orbit assigns
    labels that way, so no orbit is lost, and most relabel duplicates
    never appear.  The survivors still need orbit deduplication.
    """
    ground = list(range(1, nprime + 1))
    maxdeg = (nprime - 1) // 2
    total_slots = sum(sizes)

    def feasible(deg, used_slots):
        slots_left = total_slots - used_slots
        deficit = sum(1 for v in ground if deg.get(v, 0) == 1)
        unseen = sum(1 for v in ground if deg.get(v, 0) == 0)
        return deficit + 2 * unseen <= slots_left

    members_sets: list = []

    def rec(members, pairs, deg, used_slots, used_count, pos):
        if pos == len(sizes):
            if used_count == nprime and all(deg.get(v, 0) >= 2 for v in ground):
                yield tuple(members)
            return
        size = sizes[pos]
        start = None
        if members and len(members[-1]) == size:
            start = members[-1]
        for comb in itertools.combinations(ground[:used_count + size], size):
            if start is not None and comb <= start:
                continue
            fresh = [v for v in comb if deg.get(v, 0) == 0]
            if fresh != list(range(used_count + 1, used_count + 1 + len(fresh))):
                continue
            cpairs = set(itertools.combinations(comb, 2))
            if cpairs & pairs:
                continue
            cset = frozenset(comb)
            if any(mset <= cset for mset in members_sets):
                continue
            ndeg = dict(deg)
            okdeg = True
            for v in comb:
                ndeg[v] = ndeg.get(v, 0) + 1
                if ndeg[v] > maxdeg:
                    okdeg = False
                    break
            if not okdeg:
                continue
            if not feasible(ndeg, used_slots + size):
                continue
            members.append(comb)
            members_sets.append(cset)
            yield from rec(members, pairs | cpairs, ndeg,
                           used_slots + size, used_count + len(fresh), pos + 1)
            members.pop()
            members_sets.pop()

    yield from rec([], set(), {}, 0, 0, 0)


def candidate_presentations(n: int, k: int, nprime_max: int,
                            require_rank_defect_families: bool = True):
    """Orbit representatives of the families that can witness a rank drop.

    Enumerates admissible antichains T with every index of the union in at
    least two members, union size n' at most nprime_max, and expected rank
    between 2n'/3 and n'-2.  With the flag set (the default), keeps only
    families failing the union-count condition; switching it off retains
    the passing families too, whose varieties need an explicit rank bound.
    """
    if k != 2:
        raise ValueError("the classification scan is built for k = 2")
    if n > 9 or nprime_max > n:
        raise ValueError("desk-scale bound: n <= 9 and nprime_max <= n")
    reps = {}
    for nprime in range(4, nprime_max + 1):
        numin = -(-2 * nprime // 3)
        for nu in range(numin, nprime - 2 + 1):
            for sizes in _size_multisets(nprime, nu):
                for members in _gen_families(nprime, sizes):
                    p = presentation(nprime, 2, [frozenset(m) for m in members])
                    if not is_admissible(p):
                        continue
                    if require_rank_defect_families and check_bba(p).ok:
                        continue
                    can = orbit_canonical_cached(p)
                    reps.setdefault(can.canonical(), can)
    return sorted(reps.values(), key=lambda p: (len(p.members), p.canonical()))


def enumerate_candidates(n: int, k: int, nprime_max: int):
    """Classification candidates: see candidate_presentations."""
    return candidate_presentations(n, k, nprime_max, True)


@functools.lru_cache(maxsize=65536)
def _orbit_canonical_from(canonical: tuple, k: int):
    members = [frozenset(s) for s in canonical]
    nprime = max((i for m in members for i in m), default=0)
    return orbit_canonical(Presentation(nprime, k, frozenset(members)))


def orbit_canonical_cached(p: Presentation) -> Presentation:
    return _orbit_canonical_from(p.canonical(), p.k)


@dataclass(frozen=True)
class AuditReport:
    field: str
    nprime_max: int
    hits: tuple  # ReportHit entries, family named by canonical text form
    note: str

    def to_json_dict(self) -> dict:
        return {"field": self.field, "nprime_max": self.nprime_max,
                "hits": [h.to_json_dict() for h in self.hits],
                "note": self.note}


@functools.lru_cache(maxsize=262144)
def _screen_rows(a: Arrangement, s: tuple, p: int):
    """Dependency basis of s with denominators cleared, reduced mod p."""
    out = []
    for v in dependency_space(a, s).basis:
        den = 1
        for x in v:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append(tuple(int(x * den) % p for x in v))
    return tuple(out)


def _rank_mod_p(rows, p: int) -> int:
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    rank = 0
    for c in range(nc):
        piv = None
        for i in range(rank, nr):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        top = rows[rank]
        for i in range(rank + 1, nr):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], top)]
        rank += 1
        if rank == nr:
            break
    return rank


def audit_arrangement(a: Arrangement, nprime_max: int) -> AuditReport:
    """Test every candidate family instance against the arrangement.

    A hit is an instance whose dependency span loses rank: rank at most
    expected_rank - 1.  The scan covers families whose union fits in
    nprime_max indices, including those passing the union-count condition
    (their varieties still capture genuine rank defects).  An empty list
    bounds nothing beyond the searched families, and the note says so.

    Rational instances are first screened by rank modulo a large prime
    (the mod-p rank never exceeds the rational one, so no hit can be
    lost); every surviving instance is confirmed in exact rationals.
    The full bound on nine lines is an offline, minutes-scale scan.
    """
    if not is_generic(a):
        raise ValueError("the audit is defined for generic arrangements")
    candidates = candidate_presentations(a.n, a.k, min(nprime_max, a.n), False)
    prime = DEFAULT_SCREEN_PRIME if field_name(a) == "Q" else None

    def scan(pres: Presentation):
        out = []
        r = expected_rank(pres) - 1
        name = format_family(pres)
        support = sorted(pres.support)
        for mapping, image in _distinct_relabelings(pres, a.n):
            if prime is not None:
                rows = [row for s in image
                        for row in _screen_rows(a, tuple(sorted(s)), prime)]
                if _rank_mod_p(rows, prime) > r:
                    continue
            cert = intersection_rank(a, image)
            if cert <= r:
                labels = tuple(mapping[i] for i in support)
                out.append(ReportHit(name, labels, r, cert))
        return out

    hits = sorted((h for out in _pmap(scan, candidates) for h in out),
                  key=lambda h: (h.family, h.labels))
    return AuditReport(field_name(a), nprime_max, tuple(hits),
                       "no hit rules out rank defects only within the searched bound")
