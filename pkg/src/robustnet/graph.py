"""Immutable simple undirected graphs with bitset adjacency rows.

Vertices are the integers 0..n-1.  Row i is an integer whose bit j is set
iff (i, j) is an edge.  This keeps adjacency queries O(1) and lets the
subset-heavy callers (clique search, robustness certification) manipulate
whole vertex sets with single bitwise operations.  Vertex subsets cross the
public API as plain frozensets; masks stay internal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph, immutable once built (use :func:`new_graph`)."""

    n: int
    rows: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return self.rows[i].bit_count()

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.rows)

    def neighbors(self, i: int) -> frozenset[int]:
        """Vertices adjacent to i; never contains i itself."""
        self._check_vertex(i)
        return frozenset(bits(self.rows[i]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in bits(self.rows[u] & ~((1 << (u + 1)) - 1)):
                yield (u, v)

    def with_edge_removed(self, u: int, v: int) -> "Graph":
        """Copy of this graph without the edge (u, v); the original is unchanged."""
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def subset_mask(self, members: Iterable[int]) -> int:
        """Validated bitmask for a vertex subset."""
        mask = 0
        for v in members:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v!r} out of range for n={self.n}")


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate pairs collapse."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (isinstance(u, int) and isinstance(v, int)):
            raise ValueError(f"edge {pair!r} must be a pair of integers")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def max_clique(g: Graph) -> frozenset[int]:
    """Exact maximum clique via Bron-Kerbosch with pivoting on bitsets.

    Among all maximum cliques the one with the lexicographically smallest
    sorted vertex tuple is returned, so results are stable across runs and
    usable in golden tests.  Exponential in the worst case; intended for the
    n <= 20 range the rest of this package operates in.
    """
    rows = g.rows
    best: tuple[int, ...] = ()

    def expand(chosen: list[int], cand: int, excl: int) -> None:
        nonlocal best
        if not cand and not excl:
            key = tuple(sorted(chosen))
            if len(key) > len(best) or (len(key) == len(best) and key < best):
                best = key
            return
        # strict inequality: equal-size cliques still explored for the tie-break
        if len(chosen) + cand.bit_count() < len(best):
            return
        pivot = -1
        pivot_score = -1
        for u in bits(cand | excl):
            score = (cand & rows[u]).bit_count()
            if score > pivot_score:
                pivot, pivot_score = u, score
        for v in bits(cand & ~rows[pivot]):
            bit = 1 << v
            chosen.append(v)
            expand(chosen, cand & rows[v], excl & rows[v])
            chosen.pop()
            cand &= ~bit
            excl |= bit

    expand([], g.full_mask, 0)
    return frozenset(best)


def induced_edge_count(g: Graph, members: Iterable[int]) -> int:
    """Number of edges of g with both endpoints in the given subset."""
    mask = g.subset_mask(members)
    return sum((g.rows[i] & mask).bit_count() for i in bits(mask)) // 2


def densest_subset_of_size(g: Graph, k: int) -> tuple[frozenset[int], int]:
    """Exhaustively maximize the induced edge count over all k-subsets.

    Returns the maximizer and its edge count.  Subsets are generated in
    lexicographic order and only strict improvements replace the incumbent,
    so ties break to the lexicographically smallest subset.
    """
    if not isinstance(k, int) or not 1 <= k <= g.n:
        raise ValueError(f"subset size {k!r} out of range for n={g.n}")
    rows = g.rows
    best_set: tuple[int, ...] = ()
    best_count = -1
    for combo in combinations(range(g.n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        count = sum((rows[v] & mask).bit_count() for v in combo) // 2
        if count > best_count:
            best_set, best_count = combo, count
    return frozenset(best_set), best_count


# ---------------------------------------------------------------------------
# File formats: edge-list text and JSON
# ---------------------------------------------------------------------------

def format_edge_list(g: Graph) -> str:
    """Edge-list text: first line n, then one 'u v' line per edge, sorted."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; '#' starts a comment, blank lines are skipped."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from exc
        if n is None:
            if len(values) != 1:
                raise ValueError(f"line {lineno}: expected a single vertex count, got {raw!r}")
            n = values[0]
        elif len(values) == 2:
            edges.append((values[0], values[1]))
        else:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
    if n is None:
        raise ValueError("empty edge-list input")
    return new_graph(n, edges)


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json_dict(data: dict) -> Graph:
    try:
        n = data["n"]
        edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError("graph JSON must be an object with 'n' and 'edges'") from exc
    return new_graph(n, [tuple(e) for e in edges])


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def load_graph(path) -> Graph:
    """Read a graph file in either edge-list or JSON form (sniffed by content)."""
    text = Path(path).read_text()
    if text.lstrip()[:1] == "{":
        return graph_from_json_dict(json.loads(text))
    return parse_edge_list(text)
