"""Independent exact solvers used as ground truth for every approximate module.

All searches are deterministic branch-and-bound or ordered subset
enumeration. They are meant for desk-scale instances; a budget caps instance
size, explored nodes, and wall-clock time, and blowing any cap raises
BudgetExceededError rather than ever returning a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .graph import Graph, PackingWitness, Triangle, complete_graph, enumerate_triangles
from .hypergraph import Hypergraph, delete_hyperedges, delete_vertices, is_acyclic, on_cycle_elements


@dataclass(frozen=True)
class OracleBudget:
    """Limits for exact searches.

    max_edges caps the instance size (graph edges or hyperedges, whichever
    the oracle consumes); max_nodes caps explored search nodes; time_cap is
    in seconds.
    """

    max_edges: int = 40
    max_nodes: int = 5_000_000
    time_cap: float = 60.0


GRAPH_BUDGET = OracleBudget(max_edges=40)
HYPERGRAPH_BUDGET = OracleBudget(max_edges=14)


class _Search:
    """Node/time accounting for one oracle call."""

    __slots__ = ("budget", "nodes", "start")

    def __init__(self, budget: OracleBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(f"search exceeded {self.budget.max_nodes} nodes")
        if self.nodes % 4096 == 0 and time.monotonic() - self.start > self.budget.time_cap:
            raise BudgetExceededError(f"search exceeded {self.budget.time_cap} seconds")


def _check_size(count: int, budget: OracleBudget, what: str) -> None:
    if count > budget.max_edges:
        raise BudgetExceededError(f"{what} has {count} items, budget allows {budget.max_edges}")


def _max_disjoint(items: list[tuple[int, frozenset[int]]], search: _Search) -> list[int]:
    """Ids of a maximum pairwise-disjoint subfamily.

    Branch on the first available item (include first); bound by the count of
    still-available items and by the number of untouched elements they span
    divided by the smallest item size.
    """
    best: list[int] = []
    used: set[int] = set()
    for iid, members in items:
        if used.isdisjoint(members):
            best.append(iid)
            used |= members
    min_size = min((len(m) for _, m in items if m), default=1)

    chosen: list[int] = []

    def rec(start: int, used: frozenset[int]) -> None:
        nonlocal best
        search.tick()
        avail = [i for i in range(start, len(items)) if used.isdisjoint(items[i][1])]
        span: set[int] = set()
        empties = 0
        for i in avail:
            if items[i][1]:
                span |= items[i][1]
            else:
                empties += 1
        bound = len(chosen) + min(len(avail), empties + len(span) // max(min_size, 1))
        if bound <= len(best):
            return
        if not avail:
            if len(chosen) > len(best):
                best = chosen.copy()
            return
        first = avail[0]
        iid, members = items[first]
        chosen.append(iid)
        rec(first + 1, used | members)
        chosen.pop()
        rec(first + 1, used)

    rec(0, frozenset())
    return sorted(best)


def _min_hitting_set(items: list[tuple[int, frozenset[int]]], search: _Search) -> list[int]:
    """A minimum set of elements meeting every item (hitting set / transversal).

    Branch on the vertices of the first unhit item; lower-bound by a greedy
    pairwise-disjoint subfamily of the unhit items, each of which needs its
    own private element.
    """
    for iid, members in items:
        if not members:
            raise ValueError(f"item {iid} is empty; no hitting set exists")

    # Greedy incumbent: repeatedly take the element hitting the most unhit items.
    unhit = list(range(len(items)))
    incumbent: list[int] = []
    while unhit:
        counts: dict[int, int] = {}
        for i in unhit:
            for v in items[i][1]:
                counts[v] = counts.get(v, 0) + 1
        pick = min(counts, key=lambda v: (-counts[v], v))
        incumbent.append(pick)
        unhit = [i for i in unhit if pick not in items[i][1]]
    best = sorted(incumbent)

    def disjoint_lower_bound(unhit_idx: list[int]) -> int:
        used: set[int] = set()
        count = 0
        for i in unhit_idx:
            if used.isdisjoint(items[i][1]):
                count += 1
                used |= items[i][1]
        return count

    chosen: list[int] = []

    def rec(unhit_idx: list[int]) -> None:
        nonlocal best
        search.tick()
        if not unhit_idx:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        if len(chosen) + disjoint_lower_bound(unhit_idx) >= len(best):
            return
        target = items[unhit_idx[0]][1]
        for v in sorted(target):
            chosen.append(v)
            rec([i for i in unhit_idx if v not in items[i][1]])
            chosen.pop()

    rec(list(range(len(items))))
    return best


def max_triangle_packing(g: Graph, budget: OracleBudget = GRAPH_BUDGET) -> tuple[int, PackingWitness]:
    """Exact maximum number of pairwise edge-disjoint triangles, with witness."""
    _check_size(g.num_edges, budget, "graph edge set")
    tris = enumerate_triangles(g)
    items = [(i, frozenset(t.edge_ids)) for i, t in enumerate(tris)]
    ids = _max_disjoint(items, _Search(budget))
    witness = PackingWitness(tuple(tris[i] for i in ids))
    return len(ids), witness


def min_triangle_cover(g: Graph, budget: OracleBudget = GRAPH_BUDGET) -> tuple[int, frozenset[int]]:
    """Exact minimum edge set meeting every triangle, with witness (edge ids)."""
    _check_size(g.num_edges, budget, "graph edge set")
    items = [(i, frozenset(t.edge_ids)) for i, t in enumerate(enumerate_triangles(g))]
    cover = _min_hitting_set(items, _Search(budget))
    return len(cover), frozenset(cover)


def max_matching(h: Hypergraph, budget: OracleBudget = HYPERGRAPH_BUDGET) -> tuple[int, frozenset[int]]:
    """Exact maximum number of pairwise disjoint hyperedges, with witness ids."""
    _check_size(h.num_hyperedges, budget, "hypergraph")
    items = [(eid, e) for eid, e in zip(h.hyperedge_ids, h.hyperedges)]
    ids = _max_disjoint(items, _Search(budget))
    return len(ids), frozenset(ids)


def min_transversal(h: Hypergraph, budget: OracleBudget = HYPERGRAPH_BUDGET) -> tuple[int, frozenset[int]]:
    """Exact minimum vertex set meeting every hyperedge, with witness."""
    _check_size(h.num_hyperedges, budget, "hypergraph")
    items = [(eid, e) for eid, e in zip(h.hyperedge_ids, h.hyperedges)]
    cover = _min_hitting_set(items, _Search(budget))
    return len(cover), frozenset(cover)


def min_feedback_vertex_set(h: Hypergraph, budget: OracleBudget = HYPERGRAPH_BUDGET) -> tuple[int, frozenset[int]]:
    """Exact minimum vertex set meeting every cycle, by ordered subset search.

    Only vertices lying on some cycle are candidates: any other vertex can be
    dropped from a feedback vertex set without reintroducing a cycle.
    """
    _check_size(h.num_hyperedges, budget, "hypergraph")
    if is_acyclic(h):
        return 0, frozenset()
    search = _Search(budget)
    pool, _ = on_cycle_elements(h)
    candidates = sorted(pool)
    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            search.tick()
            if is_acyclic(delete_vertices(h, combo)):
                return k, frozenset(combo)
    raise AssertionError("deleting all on-cycle vertices must break every cycle")


def min_feedback_edge_set(h: Hypergraph, budget: OracleBudget = HYPERGRAPH_BUDGET) -> tuple[int, frozenset[int]]:
    """Exact minimum hyperedge set meeting every cycle, by ordered subset search."""
    _check_size(h.num_hyperedges, budget, "hypergraph")
    if is_acyclic(h):
        return 0, frozenset()
    search = _Search(budget)
    _, pool = on_cycle_elements(h)
    candidates = sorted(pool)
    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            search.tick()
            if is_acyclic(delete_hyperedges(h, combo)):
                return k, frozenset(combo)
    raise AssertionError("deleting all on-cycle hyperedges must break every cycle")


def _bose_triples(n: int) -> list[tuple[int, int, int]]:
    """Triangle decomposition of K_n for n = 3 (mod 6), built over Z_q x {0,1,2}
    with q = n/3 odd, using the idempotent symmetric quasigroup
    i*j = (i+j)/2 mod q."""
    q = n // 3
    half = (q + 1) // 2  # multiplicative inverse of 2 mod q

    def pt(i: int, k: int) -> int:
        return i + k * q

    triples = [(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(q)]
    for i in range(q):
        for j in range(i + 1, q):
            m = ((i + j) * half) % q
            for k in range(3):
                triples.append((pt(i, k), pt(j, k), pt(m, (k + 1) % 3)))
    return triples


def _skolem_triples(n: int) -> list[tuple[int, int, int]]:
    """Triangle decomposition of K_n for n = 1 (mod 6), built over
    Z_q x {0,1,2} plus one extra point, q = (n-1)/3 even, using a
    half-idempotent symmetric quasigroup."""
    q = (n - 1) // 3
    t = q // 2
    inf = n - 1

    def star(i: int, j: int) -> int:
        s = (i + j) % q
        return s // 2 if s % 2 == 0 else t + (s - 1) // 2

    def pt(i: int, k: int) -> int:
        return i + k * q

    triples = [(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(t)]
    for i in range(t):
        for k in range(3):
            triples.append((inf, pt(i + t, k), pt(i, (k + 1) % 3)))
    for i in range(q):
        for j in range(i + 1, q):
            m = star(i, j)
            for k in range(3):
                triples.append((pt(i, k), pt(j, k), pt(m, (k + 1) % 3)))
    return triples


def steiner_triple_system(n: int) -> PackingWitness:
    """n(n-1)/6 edge-disjoint triangles covering every edge of K_n exactly once.

    Exists exactly when n = 1 or 3 (mod 6); other n raise ValueError. The
    witness indexes edges by the canonical ids of complete_graph(n).
    """
    if n < 3 or n % 6 not in (1, 3):
        raise ValueError(f"no triangle decomposition of K_{n}: need n = 1 or 3 (mod 6), n >= 3")
    triples = _bose_triples(n) if n % 6 == 3 else _skolem_triples(n)
    kn = complete_graph(n)
    triangles = []
    for trip in triples:
        a, b, c = sorted(trip)
        es = tuple(sorted((kn.edge_id(a, b), kn.edge_id(b, c), kn.edge_id(a, c))))
        triangles.append(Triangle((a, b, c), es))
    triangles.sort(key=lambda t: t.vertices)
    witness = PackingWitness(tuple(triangles))
    witness.validate(kn)
    if 3 * len(witness) != kn.num_edges:
        raise AssertionError("decomposition does not cover every edge exactly once")
    return witness


def fano_plane() -> Hypergraph:
    """The 7-point, 7-line projective plane as a linear 3-uniform hypergraph."""
    lines = [
        {1, 2, 3},
        {1, 4, 5},
        {1, 6, 7},
        {2, 4, 6},
        {2, 5, 7},
        {3, 4, 7},
        {3, 5, 6},
    ]
    return Hypergraph(range(1, 8), lines)
