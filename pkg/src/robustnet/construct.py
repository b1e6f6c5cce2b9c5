"""Builders for sparsest maximum-robustness graphs and seeded random graphs.

The two extremal families share one pattern: a set of hub vertices adjacent
to every other vertex, plus a sparse remainder.  On 2r-1 vertices, r-1 hubs
and a tree on the remaining r vertices meet the odd-case edge bound exactly;
on 2r vertices, r hubs with a perfect matching of edges removed inside the
hub set meet the even-case bound.  Both certify at the ceil(n/2) robustness
ceiling.

Randomized builders (Erdos-Renyi sampling, random trees) draw from
random.Random, the stdlib MT19937 Mersenne Twister, in a documented fixed
order so a (parameters, seed) pair reproduces the same graph on any
platform.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, new_graph

KINDS = ("sparsest-odd", "sparsest-even", "f-elemental", "erdos-renyi", "tree")
TREE_SHAPES = ("path", "star", "random")
TAIL_SHAPES = ("path", "star", "random", "complete")


def _hub_edges(n: int, hubs: int) -> list[tuple[int, int]]:
    """Edges making every vertex below `hubs` adjacent to all other vertices."""
    edges = []
    for i in range(hubs):
        for j in range(n):
            if j != i:
                edges.append((min(i, j), max(i, j)))
    return edges


def _random_tree_edges(vertices: list[int], rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree on the given vertices (Pruefer decode)."""
    k = len(vertices)
    if k == 2:
        return [(vertices[0], vertices[1])]
    seq = [rng.randrange(k) for _ in range(k - 2)]
    degree = [1] * k
    for s in seq:
        degree[s] += 1
    leaves = [i for i in range(k) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((vertices[leaf], vertices[s]))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((vertices[a], vertices[b]))
    return edges


def _tree_edges(vertices: list[int], shape: str, rng: Optional[random.Random]) -> list[tuple[int, int]]:
    if len(vertices) <= 1:
        return []
    if shape == "path":
        return list(zip(vertices, vertices[1:]))
    if shape == "star":
        return [(vertices[0], v) for v in vertices[1:]]
    if shape == "random":
        if rng is None:
            raise ValueError("random tree shape requires a seed")
        return _random_tree_edges(vertices, rng)
    raise ValueError(f"unknown tree shape {shape!r}")


def sparsest_odd(r: int, tree_shape: str = "path", seed: Optional[int] = None) -> Graph:
    """Maximally robust graph on 2r-1 vertices with the fewest possible edges.

    Vertices 0..r-2 are hubs adjacent to everything; the remaining r
    vertices form a tree of the requested shape.  Any tree shape yields the
    same edge count, 3r(r-1)/2, and the same certified robustness r.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"robustness level must be a positive integer, got {r!r}")
    n = 2 * r - 1
    rng = random.Random(seed) if seed is not None else None
    tail = list(range(r - 1, n))
    return new_graph(n, _hub_edges(n, r - 1) + _tree_edges(tail, tree_shape, rng))


def sparsest_even(r: int) -> Graph:
    """Maximally robust graph on 2r vertices with the fewest possible edges.

    Vertices 0..r-1 are hubs adjacent to everything.  The first delta hubs
    (delta = r-1 for odd r, r-2 for even r; always even) are matched into
    consecutive pairs 0-1, 2-3, ... and each pair's connecting edge is
    removed, leaving exactly floor((r(3r-2)+2)/2) edges.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"robustness level must be a positive integer, got {r!r}")
    n = 2 * r
    g = new_graph(n, _hub_edges(n, r))
    delta = r - 1 if r % 2 else r - 2
    for k in range(0, delta, 2):
        g = g.with_edge_removed(k, k + 1)
    return g


def f_elemental(f: int, tail_shape: str = "path", seed: Optional[int] = None) -> Graph:
    """Hub-plus-connected-tail graph on 4f+1 vertices, (2f+1)-robust.

    2f hub vertices are adjacent to everything and the remaining 2f+1
    vertices form a connected subgraph of the requested shape.  The tail may
    be denser than a tree (e.g. "complete"), so unlike :func:`sparsest_odd`
    the result is not edge-minimal in general.
    """
    if not isinstance(f, int) or f < 1:
        raise ValueError(f"hub budget must be a positive integer, got {f!r}")
    if tail_shape not in TAIL_SHAPES:
        raise ValueError(f"tail shape must be one of {TAIL_SHAPES}, got {tail_shape!r}")
    n = 4 * f + 1
    hubs = 2 * f
    tail = list(range(hubs, n))
    rng = random.Random(seed) if seed is not None else None
    if tail_shape == "complete":
        tail_edges = [(u, v) for i, u in enumerate(tail) for v in tail[i + 1:]]
    else:
        tail_edges = _tree_edges(tail, tail_shape, rng)
    return new_graph(n, _hub_edges(n, hubs) + tail_edges)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p) sample.

    Pairs (i, j) with i < j are visited in lexicographic order and each
    consumes exactly one uniform draw from random.Random(seed), so identical
    (n, p, seed) triples reproduce identical edge lists byte for byte.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p!r}")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return new_graph(n, edges)


def tree_graph(n: int, tree_shape: str = "path", seed: Optional[int] = None) -> Graph:
    """Tree on n vertices: a path, a star, or a seeded uniform random tree."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"vertex count must be a positive integer, got {n!r}")
    rng = random.Random(seed) if seed is not None else None
    return new_graph(n, _tree_edges(list(range(n)), tree_shape, rng))


@dataclass(frozen=True)
class ConstructionRecipe:
    """Declarative description of a graph to build, serializable as JSON.

    kind selects the builder; r parameterizes the extremal families (for
    f-elemental, r must be odd and the hub budget is (r-1)/2); n/p/seed
    parameterize the random kinds.  A seed is required exactly when the
    build is randomized (erdos-renyi, or a random tree shape) and rejected
    otherwise, so every randomized artifact records its own replay key.
    """

    kind: str
    r: Optional[int] = None
    n: Optional[int] = None
    p: Optional[float] = None
    seed: Optional[int] = None
    tree_shape: Optional[str] = None

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"recipe kind must be one of {KINDS}, got {self.kind!r}")
        shaped = self.kind in ("sparsest-odd", "f-elemental", "tree")
        if self.kind in ("sparsest-odd", "sparsest-even", "f-elemental"):
            if self.r is None or self.n is not None:
                raise ValueError(f"{self.kind} recipe takes r, not n")
            if not isinstance(self.r, int) or self.r < 1:
                raise ValueError(f"r must be a positive integer, got {self.r!r}")
            if self.kind == "f-elemental" and (self.r < 3 or self.r % 2 == 0):
                raise ValueError(f"f-elemental robustness must be odd and >= 3, got {self.r}")
        else:
            if self.n is None or self.r is not None:
                raise ValueError(f"{self.kind} recipe takes n, not r")
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if self.kind == "erdos-renyi":
            if self.p is None:
                raise ValueError("erdos-renyi recipe requires p")
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"edge probability must be in [0, 1], got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"p only applies to erdos-renyi recipes, not {self.kind}")
        if self.tree_shape is not None:
            if not shaped:
                raise ValueError(f"tree_shape does not apply to {self.kind} recipes")
            if self.tree_shape not in TREE_SHAPES:
                raise ValueError(f"tree_shape must be one of {TREE_SHAPES}, got {self.tree_shape!r}")
        randomized = self.kind == "erdos-renyi" or (shaped and self.tree_shape == "random")
        if randomized and self.seed is None:
            raise ValueError(f"{self.kind} recipe with randomized output requires a seed")
        if not randomized and self.seed is not None:
            raise ValueError(f"seed only applies to randomized recipes, not this {self.kind} recipe")

    def to_json_dict(self) -> dict:
        data = {"kind": self.kind}
        for key in ("r", "n", "p", "seed", "tree_shape"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "ConstructionRecipe":
        if not isinstance(data, dict) or "kind" not in data:
            raise ValueError("recipe JSON must be an object with a 'kind'")
        unknown = set(data) - {"kind", "r", "n", "p", "seed", "tree_shape"}
        if unknown:
            raise ValueError(f"unknown recipe fields: {sorted(unknown)}")
        recipe = cls(**data)
        recipe.validate()
        return recipe


def build(recipe: ConstructionRecipe) -> Graph:
    """Build the graph described by a validated recipe."""
    recipe.validate()
    shape = recipe.tree_shape or "path"
    if recipe.kind == "sparsest-odd":
        return sparsest_odd(recipe.r, shape, recipe.seed)
    if recipe.kind == "sparsest-even":
        return sparsest_even(recipe.r)
    if recipe.kind == "f-elemental":
        return f_elemental((recipe.r - 1) // 2, shape, recipe.seed)
    if recipe.kind == "erdos-renyi":
        return erdos_renyi(recipe.n, recipe.p, recipe.seed)
    return tree_graph(recipe.n, shape, recipe.seed)
