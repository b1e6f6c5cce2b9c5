"""Exact r-reachability and r-robustness certification plus edge lower bounds.

A vertex subset S is r-reachable when some member has at least r neighbors
outside S.  A graph is r-robust when, for every pair of disjoint nonempty
vertex subsets, at least one side is r-reachable; the maximum attainable
level on n vertices is ceil(n/2).

The certifier enumerates assignments of vertices to (S1, S2, neither) as a
pair of bitmasks.  Each unordered pair of disjoint nonempty subsets is
visited exactly once: the S1 mask ascends over all nonempty subsets, and
within it the S2 mask ascends over submasks of the complement restricted to
indices above S1's smallest member (so the smallest assigned vertex always
sits in S1).  Three prunings keep the 3^n space tractable up to n ~ 16:

* a pair is abandoned as soon as either side shows a vertex with r
  outside-neighbors (whole S2 branches are skipped when S1 alone suffices);
* levels above ceil(n/2) are never part of the search;
* the maximum level is located by binary search capped at the minimum
  degree, probing the cap first since extremal graphs usually sit there.

Subset reachability values are memoized per certification run, which is
what makes repeated level scans cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, bits, densest_subset_of_size, max_clique

# Exhaustive certification beyond ~20 vertices is out of reach (3^n pairs);
# refuse early rather than thrash.
MAX_EXACT_N = 20

ODD_CASE = "odd-case"
EVEN_CASE = "even-case"
GENERAL_COROLLARY = "general-corollary"

_UNKNOWN = 0xFF  # memo sentinel; reachability values are < MAX_EXACT_N

WitnessPair = tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class RobustnessCertificate:
    """Exact maximum robustness with a witness pair proving it is maximal.

    The witness is a disjoint nonempty pair in which neither side is
    (r_max + 1)-reachable; it is absent only for the single-vertex graph,
    where no valid pair exists and r_max = 1 is adopted from the ceil(n/2)
    ceiling convention.  pairs_examined counts the (S1, S2) pairs whose
    joint reachability was evaluated across all level scans (diagnostics).
    """

    r_max: int
    witness: Optional[WitnessPair]
    pairs_examined: int

    def to_json_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            s1, s2 = self.witness
            witness = {"s1": sorted(s1), "s2": sorted(s2)}
        return {
            "r_max": self.r_max,
            "witness": witness,
            "pairs_examined": self.pairs_examined,
        }


@dataclass(frozen=True)
class BoundReport:
    """Lower bound on the edge count of any r-robust graph on n vertices."""

    n: int
    r: int
    bound: int
    kind: str


@dataclass(frozen=True)
class LemmaCheck:
    """One structural requirement: found must be at least required."""

    name: str
    required: int
    found: int
    witness: frozenset[int]

    @property
    def passed(self) -> bool:
        return self.found >= self.required


@dataclass(frozen=True)
class StructuralReport:
    n: int
    r: int
    checks: tuple[LemmaCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)


def reachability(g: Graph, members) -> int:
    """Largest r for which the subset is r-reachable.

    Equals the maximum, over the subset's members, of the number of their
    neighbors outside the subset.  The empty set is rejected.
    """
    mask = g.subset_mask(members)
    if mask == 0:
        raise ValueError("reachability of the empty set is undefined")
    return _reach_of_mask(g.rows, mask)


def _reach_of_mask(rows, mask: int) -> int:
    best = 0
    outside = ~mask
    remaining = mask
    while remaining:
        low = remaining & -remaining
        remaining ^= low
        d = (rows[low.bit_length() - 1] & outside).bit_count()
        if d > best:
            best = d
    return best


def _level_scan(g: Graph, r: int, memo: bytearray):
    """Search for a disjoint nonempty pair with both sides below level r.

    Returns (robust, witness_masks, pairs_examined); witness_masks is the
    first violating pair in the canonical enumeration order, or None.
    """
    if r <= 0:
        return True, None, 0
    rows = g.rows
    full = g.full_mask
    pairs = 0
    for m1 in range(1, full + 1):
        r1 = memo[m1]
        if r1 == _UNKNOWN:
            r1 = _reach_of_mask(rows, m1)
            memo[m1] = r1
        if r1 >= r:
            continue  # every pair with this S1 is already settled
        low = (m1 & -m1).bit_length() - 1
        allowed = ~m1 & full & ~((1 << (low + 1)) - 1)
        s2 = 0
        while True:
            s2 = (s2 - allowed) & allowed  # ascending submask enumeration
            if not s2:
                break
            pairs += 1
            r2 = memo[s2]
            if r2 == _UNKNOWN:
                r2 = _reach_of_mask(rows, s2)
                memo[s2] = r2
            if r2 < r:
                return False, (m1, s2), pairs
    return True, None, pairs


def _check_capability(n: int) -> None:
    if n > MAX_EXACT_N:
        raise ValueError(
            f"exact certification enumerates ~3^n subset pairs; "
            f"n={n} exceeds the supported limit of {MAX_EXACT_N}"
        )


def is_r_robust(g: Graph, r: int) -> tuple[bool, Optional[WitnessPair]]:
    """Decide r-robustness; on failure also return a violating pair.

    The witness is the first pair, in the canonical enumeration order, in
    which neither side is r-reachable.  r = 0 is vacuously satisfied by any
    graph, as is every level on the single-vertex graph (no pair exists).
    """
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"robustness level must be a non-negative integer, got {r!r}")
    if r == 0:
        return True, None
    _check_capability(g.n)
    memo = bytearray(b"\xff") * (1 << g.n)
    robust, witness_masks, _ = _level_scan(g, r, memo)
    return robust, _masks_to_witness(witness_masks)


def _masks_to_witness(witness_masks) -> Optional[WitnessPair]:
    if witness_masks is None:
        return None
    m1, m2 = witness_masks
    return frozenset(bits(m1)), frozenset(bits(m2))


def max_robustness(g: Graph) -> RobustnessCertificate:
    """Certify the exact maximum r for which the graph is r-robust.

    The witness realizes the minimum over pairs of the larger side
    reachability; when several pairs tie, the first one encountered in the
    canonical enumeration order at level r_max + 1 is reported, so
    certificates are reproducible.
    """
    if g.n == 1:
        # No disjoint nonempty pair exists; adopt the ceil(n/2) ceiling.
        return RobustnessCertificate(r_max=1, witness=None, pairs_examined=0)
    _check_capability(g.n)
    memo = bytearray(b"\xff") * (1 << g.n)
    total = 0
    outcomes: dict[int, tuple[bool, object]] = {}

    def scan(level: int) -> bool:
        nonlocal total
        robust, witness_masks, pairs = _level_scan(g, level, memo)
        total += pairs
        outcomes[level] = (robust, witness_masks)
        return robust

    ceiling = (g.n + 1) // 2
    cap = min(ceiling, g.min_degree())
    r_max = 0
    if cap >= 1:
        if scan(cap):
            r_max = cap
        else:
            lo, hi = 0, cap - 1
            while lo < hi:
                mid = (lo + hi + 1) // 2
                if scan(mid):
                    lo = mid
                else:
                    hi = mid - 1
            r_max = lo
    if (r_max + 1) not in outcomes:
        scan(r_max + 1)
    robust_above, witness_masks = outcomes[r_max + 1]
    assert not robust_above, "level above the certified maximum scanned robust"
    return RobustnessCertificate(
        r_max=r_max,
        witness=_masks_to_witness(witness_masks),
        pairs_examined=total,
    )


def edge_lower_bound(n: int, r: int) -> BoundReport:
    """Fewest edges any r-robust graph on n vertices can have.

    n = 2r-1 and n = 2r get the tight extremal bounds; all other feasible n
    fall back to the general 3r(r-1)/2 bound, which is valid for every
    r-robust graph regardless of size but is not claimed tight there.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"robustness level must be a positive integer, got {r!r}")
    if not isinstance(n, int) or n < 2 * r - 1:
        raise ValueError(f"no {r}-robust graph on {n!r} nodes exists (need n >= 2r-1 = {2 * r - 1})")
    if n == 2 * r - 1:
        return BoundReport(n=n, r=r, bound=3 * r * (r - 1) // 2, kind=ODD_CASE)
    if n == 2 * r:
        return BoundReport(n=n, r=r, bound=(r * (3 * r - 2) + 2) // 2, kind=EVEN_CASE)
    return BoundReport(n=n, r=r, bound=3 * r * (r - 1) // 2, kind=GENERAL_COROLLARY)


def check_structural_lemmas(g: Graph, r: int) -> StructuralReport:
    """Clique and dense-subgraph structure every maximally robust graph carries.

    An r-robust graph on 2r-1 vertices must contain an (r+1)-clique; on 2r
    vertices it must contain a floor((r+4)/2)-clique and an (r+1)-vertex
    induced subgraph with at least floor((r^2+2)/2) edges.  The caller is
    expected to pass a graph already certified r-robust; the checks here are
    unconditional searches reported with witnesses.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"robustness level must be a positive integer, got {r!r}")
    if g.n == 2 * r - 1:
        clique = max_clique(g)
        checks = (LemmaCheck("clique", r + 1, len(clique), clique),)
    elif g.n == 2 * r:
        clique = max_clique(g)
        subset, count = densest_subset_of_size(g, r + 1)
        checks = (
            LemmaCheck("clique", (r + 4) // 2, len(clique), clique),
            LemmaCheck("dense-subset", (r * r + 2) // 2, count, subset),
        )
    else:
        raise ValueError(f"structural checks apply to n in {{2r-1, 2r}}; got n={g.n} for r={r}")
    return StructuralReport(n=g.n, r=r, checks=checks)
