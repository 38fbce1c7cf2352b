"""Simple undirected graphs with canonical edge ids, plus triangle machinery and generators.

Vertices are dense integers 0..n-1. Every edge gets a stable id: its index in
the lexicographic ordering of the sorted vertex pairs, so ids never depend on
construction order. Triangle hypergraphs built elsewhere reuse these edge ids
as their vertex ids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Triangle:
    """A triangle, stored as its sorted vertex triple and sorted edge-id triple."""

    vertices: tuple[int, int, int]
    edge_ids: tuple[int, int, int]


@dataclass(frozen=True)
class PackingWitness:
    """A sequence of pairwise edge-disjoint triangles.

    Certifies a lower bound on the maximum number of edge-disjoint triangles.
    """

    triangles: tuple[Triangle, ...]

    def __len__(self) -> int:
        return len(self.triangles)

    def edge_ids(self) -> frozenset[int]:
        return frozenset(e for t in self.triangles for e in t.edge_ids)

    def validate(self, g: "Graph") -> None:
        """Raise ValueError unless every triangle lies in g and no edge id repeats."""
        used: set[int] = set()
        for t in self.triangles:
            a, b, c = t.vertices
            if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
                raise ValueError(f"not a triangle of the graph: {t.vertices}")
            expect = tuple(sorted((g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c))))
            if t.edge_ids != expect:
                raise ValueError(f"edge ids {t.edge_ids} do not match vertices {t.vertices}")
            for e in t.edge_ids:
                if e in used:
                    raise ValueError(f"edge id {e} used by two triangles")
                used.add(e)


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_edge_index", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._edge_index = {pair: i for i, pair in enumerate(self.edges)}
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        pair = (u, v) if u < v else (v, u)
        return self._edge_index[pair]

    def edge_pair(self, edge_id: int) -> tuple[int, int]:
        return self.edges[edge_id]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


def _make_triangle(g: Graph, a: int, b: int, c: int) -> Triangle:
    vs = tuple(sorted((a, b, c)))
    es = tuple(sorted((g.edge_id(a, b), g.edge_id(b, c), g.edge_id(a, c))))
    return Triangle(vs, es)  # type: ignore[arg-type]


def enumerate_triangles(g: Graph) -> tuple[Triangle, ...]:
    """All triangles of g, each exactly once, ordered by sorted vertex triple.

    Scans each edge (u, v) with u < v and keeps only common neighbors w > v,
    so every triangle is reported from its lexicographically smallest edge.
    """
    out: list[Triangle] = []
    for u, v in g.edges:
        common = g.neighbors(u) & g.neighbors(v)
        for w in sorted(common):
            if w > v:
                out.append(_make_triangle(g, u, v, w))
    return tuple(out)


def irreducible_subgraph(g: Graph) -> Graph:
    """g minus every edge lying in no triangle.

    One pass suffices: removing an edge outside all triangles destroys no
    triangle, so the triangle set is preserved exactly.
    """
    keep: set[int] = set()
    for t in enumerate_triangles(g):
        keep.update(t.edge_ids)
    return Graph(g.n, (g.edge_pair(e) for e in sorted(keep)))


def bipartite_cut_cover(g: Graph) -> frozenset[int]:
    """Edge ids outside a large bipartition cut; always a triangle cover.

    Deterministic local search: start with every vertex on side 0, scan
    vertices in id order, move a vertex whenever that strictly increases the
    cut, and stop after a full pass without moves. At a local optimum each
    vertex has at least half its incident edges cut, so the cut has >= |E|/2
    edges and the returned uncut set has at most floor(|E|/2). Any triangle
    has two vertices on one side, hence an uncut edge in the returned set.
    """
    side = [0] * g.n
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            same = sum(1 for w in g.neighbors(v) if side[w] == side[v])
            if 2 * same > g.degree(v):
                side[v] ^= 1
                moved = True
    return frozenset(i for i, (u, v) in enumerate(g.edges) if side[u] == side[v])


def extend_packing(g: Graph, base: Sequence[Triangle]) -> PackingWitness:
    """Greedily extend an edge-disjoint triangle set to a maximal one.

    Candidates are scanned in canonical triangle order. Raises ValueError if
    the base set is not edge-disjoint or not made of triangles of g.
    """
    chosen = list(base)
    PackingWitness(tuple(chosen)).validate(g)
    used = {e for t in chosen for e in t.edge_ids}
    for t in enumerate_triangles(g):
        if used.isdisjoint(t.edge_ids):
            chosen.append(t)
            used.update(t.edge_ids)
    return PackingWitness(tuple(chosen))


def greedy_triangle_packing(g: Graph, seed: int | None = None) -> PackingWitness:
    """Maximal (not maximum) edge-disjoint triangle set.

    With seed=None the canonical triangle order is used; otherwise the
    candidate order is shuffled reproducibly by that seed. The result is
    always maximal: no remaining triangle of g is edge-disjoint from it.
    """
    tris = list(enumerate_triangles(g))
    if seed is not None:
        random.Random(seed).shuffle(tris)
    chosen: list[Triangle] = []
    used: set[int] = set()
    for t in tris:
        if used.isdisjoint(t.edge_ids):
            chosen.append(t)
            used.update(t.edge_ids)
    return PackingWitness(tuple(chosen))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shifted = ((u + a.n, v + a.n) for u, v in b.edges)
    return Graph(a.n + b.n, list(a.edges) + list(shifted))


GADGETS = {"K4": 4, "K5": 5}


def gadget_augment(g: Graph, k: int, gadget: str) -> Graph:
    """g plus k disjoint copies of the named complete-graph gadget (K4 or K5)."""
    if k < 0:
        raise ValueError("gadget count must be nonnegative")
    if gadget not in GADGETS:
        raise ValueError(f"unknown gadget {gadget!r}; expected one of {sorted(GADGETS)}")
    out = g
    for _ in range(k):
        out = disjoint_union(out, complete_graph(GADGETS[gadget]))
    return out


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph: each of the C(n, 2) pairs kept independently with probability p.

    Reproducible: a Mersenne Twister seeded with `seed` draws one uniform
    number per vertex pair in lexicographic pair order.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)
