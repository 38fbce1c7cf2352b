"""Hypergraphs with the path/cycle machinery used by the cycle-breaking engines.

A cycle of length k >= 2 is an alternating sequence v1 e1 v2 e2 ... vk ek v1
with distinct vertices, distinct hyperedges, and {v_i, v_{i+1}} contained in
e_i (indices mod k). The cycle is treated as a sub-hypergraph whose vertex set
is the union of its hyperedges. Consequences used throughout:

* a hyperedge lies on a cycle when it is one of the cycle's hyperedges;
* a vertex lies on a cycle when it belongs to any hyperedge of some cycle,
  even if it is not one of the v_i on the alternating spine;
* in a linear hypergraph every cycle has length at least 3, since a 2-cycle
  would force two hyperedges to share two vertices.

Hyperedge ids are stable: deleting vertices or hyperedges yields a new
hypergraph whose surviving hyperedges keep their original ids, so recursion
traces and witness sets always refer to the input instance.

The incidence graph (bipartite, vertices on one side and hyperedges on the
other, adjacency = membership) drives all cycle searches: hypergraph cycles of
length k correspond exactly to incidence cycles of length 2k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import NotLinearError
from .graph import Graph, enumerate_triangles


class Hypergraph:
    """Hypergraph with integer vertex ids and stable integer hyperedge ids."""

    __slots__ = ("vertices", "_edges", "_incident")

    def __init__(self, vertices: Iterable[int], hyperedges: Iterable[Iterable[int]]):
        vs = frozenset(vertices)
        edges = {i: frozenset(e) for i, e in enumerate(hyperedges)}
        self._init_parts(vs, edges)

    @classmethod
    def _from_parts(cls, vertices: frozenset[int], edges: Mapping[int, frozenset[int]]) -> "Hypergraph":
        obj = cls.__new__(cls)
        obj._init_parts(vertices, dict(edges))
        return obj

    def _init_parts(self, vertices: frozenset[int], edges: dict[int, frozenset[int]]) -> None:
        incident: dict[int, list[int]] = {}
        for eid in sorted(edges):
            e = edges[eid]
            for v in e:
                if v not in vertices:
                    raise ValueError(f"hyperedge {eid} contains unknown vertex {v}")
                incident.setdefault(v, []).append(eid)
        self.vertices = vertices
        self._edges = {eid: edges[eid] for eid in sorted(edges)}
        self._incident = {v: tuple(eids) for v, eids in incident.items()}

    @property
    def num_hyperedges(self) -> int:
        return len(self._edges)

    @property
    def hyperedge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    @property
    def hyperedges(self) -> tuple[frozenset[int], ...]:
        """Hyperedge vertex sets in ascending id order."""
        return tuple(self._edges.values())

    def hyperedge(self, eid: int) -> frozenset[int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise ValueError(f"unknown hyperedge id {eid}") from None

    def has_hyperedge(self, eid: int) -> bool:
        return eid in self._edges

    def incident(self, v: int) -> tuple[int, ...]:
        """Ids of hyperedges containing v, ascending."""
        if v not in self.vertices:
            raise ValueError(f"unknown vertex id {v}")
        return self._incident.get(v, ())

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def non_isolated_vertices(self) -> frozenset[int]:
        return frozenset(self._incident)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"Hypergraph(vertices={len(self.vertices)}, hyperedges={self.num_hyperedges})"


@dataclass(frozen=True)
class Path:
    """Alternating path v1 e1 v2 ... ek v(k+1); a single vertex is a path of length 0."""

    vertices: tuple[int, ...]
    hyperedge_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.hyperedge_ids)


@dataclass(frozen=True)
class Cycle:
    """Alternating cycle v1 e1 v2 ... vk ek v1 in canonical form.

    Canonical form: among all rotations of both orientations, the
    lexicographically least (vertices, hyperedge_ids) pair; the spine then
    starts at its smallest vertex id.
    """

    vertices: tuple[int, ...]
    hyperedge_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.hyperedge_ids)

    @classmethod
    def canonical(cls, vertices: Iterable[int], hyperedge_ids: Iterable[int]) -> "Cycle":
        vs = list(vertices)
        es = list(hyperedge_ids)
        if len(vs) != len(es) or len(vs) < 2:
            raise ValueError("cycle needs equally many vertices and hyperedges, at least 2 each")
        k = len(vs)
        # Reflected traversal: v1, vk, ..., v2 along ek, e(k-1), ..., e1.
        rvs = [vs[0]] + vs[:0:-1]
        res = es[::-1]
        best = None
        for seq_v, seq_e in ((vs, es), (rvs, res)):
            for r in range(k):
                cand = (tuple(seq_v[r:] + seq_v[:r]), tuple(seq_e[r:] + seq_e[:r]))
                if best is None or cand < best:
                    best = cand
        return cls(*best)


def validate_path(h: Hypergraph, path: Path) -> None:
    """Raise ValueError unless path satisfies the alternating-path invariants in h."""
    vs, es = path.vertices, path.hyperedge_ids
    if len(vs) != len(es) + 1:
        raise ValueError("path needs one more vertex than hyperedges")
    if len(set(vs)) != len(vs) or len(set(es)) != len(es):
        raise ValueError("path vertices and hyperedges must be distinct")
    for i, eid in enumerate(es):
        if not {vs[i], vs[i + 1]} <= h.hyperedge(eid):
            raise ValueError(f"hyperedge {eid} does not contain consecutive vertices")
    for v in vs:
        if v not in h.vertices:
            raise ValueError(f"unknown vertex {v}")


def validate_cycle(h: Hypergraph, cycle: Cycle) -> None:
    """Raise ValueError unless cycle satisfies the cycle invariants in h."""
    vs, es = cycle.vertices, cycle.hyperedge_ids
    if len(vs) != len(es) or len(vs) < 2:
        raise ValueError("cycle needs equally many vertices and hyperedges, at least 2 each")
    if len(set(vs)) != len(vs) or len(set(es)) != len(es):
        raise ValueError("cycle vertices and hyperedges must be distinct")
    k = len(vs)
    for i in range(k):
        if not {vs[i], vs[(i + 1) % k]} <= h.hyperedge(es[i]):
            raise ValueError(f"hyperedge {es[i]} does not contain consecutive vertices")


def is_linear(h: Hypergraph) -> bool:
    """True when every pair of distinct hyperedges shares at most one vertex."""
    edges = h.hyperedges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if len(edges[i] & edges[j]) > 1:
                return False
    return True


def is_k_uniform(h: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in h.hyperedges)


def triangle_hypergraph(g: Graph) -> Hypergraph:
    """The hypergraph whose vertices are g's edge ids and whose hyperedges are
    the edge-id triples of g's triangles.

    Always 3-uniform and linear: two triangles of a simple graph share at most
    one edge. Edges of g lying in no triangle become isolated vertices.
    """
    hg = Hypergraph(range(g.num_edges), (t.edge_ids for t in enumerate_triangles(g)))
    assert is_k_uniform(hg, 3)
    assert is_linear(hg)
    return hg


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    hyperedge_ids: tuple[int, ...]


def components(h: Hypergraph) -> tuple[Component, ...]:
    """Connected components under alternating paths, ordered by least vertex.

    Isolated vertices form singleton components. Empty hyperedges touch no
    vertex and are not assigned to any component.
    """
    seen: set[int] = set()
    out: list[Component] = []
    for start in sorted(h.vertices):
        if start in seen:
            continue
        verts = {start}
        eids: set[int] = set()
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            for eid in h.incident(v):
                if eid in eids:
                    continue
                eids.add(eid)
                for w in h.hyperedge(eid):
                    if w not in seen:
                        seen.add(w)
                        verts.add(w)
                        queue.append(w)
        out.append(Component(frozenset(verts), tuple(sorted(eids))))
    return tuple(out)


def delete_vertices(h: Hypergraph, vertex_ids: Iterable[int]) -> Hypergraph:
    """Remove the vertices and every hyperedge touching one of them."""
    drop = frozenset(vertex_ids)
    unknown = drop - h.vertices
    if unknown:
        raise ValueError(f"unknown vertex ids {sorted(unknown)}")
    keep_edges = {eid: e for eid, e in zip(h.hyperedge_ids, h.hyperedges) if not (e & drop)}
    return Hypergraph._from_parts(h.vertices - drop, keep_edges)


def delete_hyperedges(h: Hypergraph, edge_ids: Iterable[int]) -> Hypergraph:
    """Remove the hyperedges; every vertex stays."""
    drop = frozenset(edge_ids)
    unknown = drop - frozenset(h.hyperedge_ids)
    if unknown:
        raise ValueError(f"unknown hyperedge ids {sorted(unknown)}")
    keep_edges = {eid: e for eid, e in zip(h.hyperedge_ids, h.hyperedges) if eid not in drop}
    return Hypergraph._from_parts(h.vertices, keep_edges)


# ---------------------------------------------------------------------------
# Incidence-graph internals.
#
# Nodes are encoded as ints: vertex v -> 2v, hyperedge e -> 2e+1. The shift
# keeps vertex and hyperedge id spaces apart even when they overlap
# numerically, and works for negative ids.
# ---------------------------------------------------------------------------


def _vnode(v: int) -> int:
    return v << 1


def _enode(e: int) -> int:
    return (e << 1) | 1


def _is_enode(x: int) -> bool:
    return bool(x & 1)


def _node_id(x: int) -> int:
    return x >> 1


def _incidence_adj(h: Hypergraph) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {}
    for v in h.vertices:
        adj[_vnode(v)] = [_enode(e) for e in h.incident(v)]
    for eid, e in zip(h.hyperedge_ids, h.hyperedges):
        adj[_enode(eid)] = [_vnode(v) for v in sorted(e)]
    return {x: tuple(ns) for x, ns in adj.items()}


def is_acyclic(h: Hypergraph) -> bool:
    """True when h has no cycle, i.e. its incidence graph is a forest."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for eid, e in zip(h.hyperedge_ids, h.hyperedges):
        en = _enode(eid)
        parent[en] = en
        for v in e:
            vn = _vnode(v)
            if vn not in parent:
                parent[vn] = vn
            ra, rb = find(en), find(vn)
            if ra == rb:
                return False
            parent[ra] = rb
    return True


def _bridge_edges(adj: Mapping[int, tuple[int, ...]]) -> set[frozenset[int]]:
    """Bridges of a simple undirected graph, iterative lowpoint computation."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[frozenset[int]] = set()
    timer = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int | None, int]] = [(root, None, 0)]
        while stack:
            node, par, idx = stack[-1]
            if idx < len(adj[node]):
                stack[-1] = (node, par, idx + 1)
                nxt = adj[node][idx]
                if nxt == par:
                    continue
                if nxt in disc:
                    low[node] = min(low[node], disc[nxt])
                else:
                    disc[nxt] = low[nxt] = timer
                    timer += 1
                    stack.append((nxt, node, 0))
            else:
                stack.pop()
                if par is not None:
                    low[par] = min(low[par], low[node])
                    if low[node] > disc[par]:
                        bridges.add(frozenset((par, node)))
    return bridges


def on_cycle_elements(h: Hypergraph) -> tuple[frozenset[int], frozenset[int]]:
    """(vertices, hyperedge ids) lying on at least one cycle of h.

    A hyperedge lies on a cycle exactly when its incidence node has a
    non-bridge incidence edge; a vertex lies on a cycle exactly when one of
    its hyperedges does (cycles are sub-hypergraphs spanning all vertices of
    their hyperedges).
    """
    adj = _incidence_adj(h)
    bridges = _bridge_edges(adj)
    cyc_edges: set[int] = set()
    for eid in h.hyperedge_ids:
        en = _enode(eid)
        if any(frozenset((en, vn)) not in bridges for vn in adj[en]):
            cyc_edges.add(eid)
    cyc_verts = {v for e in cyc_edges for v in h.hyperedge(e)}
    return frozenset(cyc_verts), frozenset(cyc_edges)


def _bfs_path(adj: Mapping[int, tuple[int, ...]], src: int, dst: int, banned: int) -> list[int] | None:
    """Shortest src -> dst node path avoiding `banned`, deterministic tie-break.

    Neighbors are explored in the (sorted) adjacency order, so the parent of
    every node is fixed and the returned path is reproducible.
    """
    if src == dst:
        return [src]
    prev: dict[int, int] = {src: src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y == banned or y in prev:
                continue
            prev[y] = x
            if y == dst:
                path = [y]
                while path[-1] != src:
                    path.append(prev[path[-1]])
                path.reverse()
                return path
            queue.append(y)
    return None


def _cycle_key(cycle: Cycle) -> tuple:
    return (len(cycle), tuple(sorted(cycle.hyperedge_ids)), cycle.vertices, cycle.hyperedge_ids)


def _cycle_through_edge(h: Hypergraph, adj: Mapping[int, tuple[int, ...]], eid: int) -> Cycle | None:
    """Shortest cycle whose hyperedge set contains eid, or None.

    Any such cycle enters and leaves eid through two of its vertices; the rest
    is an alternating path between them avoiding eid. One BFS per vertex pair
    is exact.
    """
    members = sorted(h.hyperedge(eid))
    best: Cycle | None = None
    best_key: tuple | None = None
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            a, b = members[i], members[j]
            path = _bfs_path(adj, _vnode(a), _vnode(b), _enode(eid))
            if path is None:
                continue
            # Node path alternates a, e1, w1, ..., b; spine of the cycle is
            # a -> (through eid) -> b -> back along the path.
            verts = [_node_id(x) for x in path[::2]]
            edges = [_node_id(x) for x in path[1::2]]
            cyc = Cycle.canonical([verts[0]] + verts[:0:-1], [eid] + edges[::-1])
            key = _cycle_key(cyc)
            if best_key is None or key < best_key:
                best, best_key = cyc, key
    return best


def find_cycle_through(h: Hypergraph, *, vertex: int | None = None, edge: int | None = None) -> Cycle | None:
    """A cycle containing the given element, or None if there is none.

    Exactly one of `vertex` and `edge` must be supplied. Containment follows
    the sub-hypergraph reading: a vertex is contained in a cycle when it
    belongs to any of the cycle's hyperedges. The hypergraph must be linear.
    Deterministic: the shortest such cycle under a fixed tie-break is
    returned.
    """
    if (vertex is None) == (edge is None):
        raise ValueError("exactly one of vertex= and edge= must be given")
    if not is_linear(h):
        raise NotLinearError("cycle search requires a linear hypergraph")
    adj = _incidence_adj(h)
    if edge is not None:
        if not h.has_hyperedge(edge):
            raise ValueError(f"unknown hyperedge id {edge}")
        return _cycle_through_edge(h, adj, edge)
    if vertex not in h.vertices:
        raise ValueError(f"unknown vertex id {vertex}")
    best: Cycle | None = None
    best_key: tuple | None = None
    for eid in h.incident(vertex):
        cyc = _cycle_through_edge(h, adj, eid)
        if cyc is None:
            continue
        key = _cycle_key(cyc)
        if best_key is None or key < best_key:
            best, best_key = cyc, key
    return best


def _girth(h: Hypergraph, adj: Mapping[int, tuple[int, ...]]) -> int | None:
    best: int | None = None
    for eid in h.hyperedge_ids:
        members = sorted(h.hyperedge(eid))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                path = _bfs_path(adj, _vnode(members[i]), _vnode(members[j]), _enode(eid))
                if path is None:
                    continue
                length = 1 + len(path) // 2
                if best is None or length < best:
                    best = length
    return best


def shortest_cycle(h: Hypergraph) -> Cycle | None:
    """A minimum-length cycle of h, or None when h is acyclic.

    Requires a linear hypergraph (so every cycle has length >= 3). The
    tie-break is exact: among all minimum-length cycles, the one with the
    lexicographically least (sorted hyperedge ids, canonical spine) wins,
    which in particular starts at the least possible vertex id.
    """
    if not is_linear(h):
        raise NotLinearError("cycle search requires a linear hypergraph")
    adj = _incidence_adj(h)
    girth = _girth(h, adj)
    if girth is None:
        return None
    best_key: tuple | None = None
    best: Cycle | None = None
    incident = {v: h.incident(v) for v in h.non_isolated_vertices()}

    def report(verts: list[int], edges: list[int]) -> None:
        nonlocal best, best_key
        cyc = Cycle.canonical(verts, edges)
        key = _cycle_key(cyc)
        if best_key is None or key < best_key:
            best, best_key = cyc, key

    # Enumerate every cycle of length exactly `girth` whose least spine vertex
    # is the start; shorter closures cannot exist.
    for start in sorted(incident):
        spine = [start]
        used_edges: list[int] = []
        used_edge_set: set[int] = set()
        on_spine = {start}

        def extend(cur: int) -> None:
            depth = len(used_edges)
            for eid in incident[cur]:
                if eid in used_edge_set:
                    continue
                e = h.hyperedge(eid)
                if depth == girth - 1:
                    if start in e and cur != start:
                        report(spine.copy(), used_edges + [eid])
                    continue
                for w in sorted(e):
                    if w == cur or w in on_spine or w < start:
                        continue
                    spine.append(w)
                    used_edges.append(eid)
                    used_edge_set.add(eid)
                    on_spine.add(w)
                    extend(w)
                    on_spine.discard(w)
                    used_edge_set.discard(eid)
                    used_edges.pop()
                    spine.pop()

        extend(start)
    assert best is not None
    return best
