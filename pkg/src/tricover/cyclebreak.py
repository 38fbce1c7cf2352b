"""Cycle destruction for linear 3-uniform hypergraphs.

Two engines:

* `feedback_vertex_set` removes at most floor(m/3) vertices from an m-edge
  linear 3-uniform hypergraph and leaves it acyclic. It recurses on one of
  five rules, tried in a fixed priority order, each charging at least three
  deleted hyperedges per removed vertex.
* `minimal_fes` greedily shrinks the trivial all-hyperedges feedback edge set
  to a minimal one; for linear 3-uniform inputs its size is bounded by
  2m - |V'| + p, with V' the non-isolated vertices and p their component
  count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLinearError, NotThreeUniformError
from .hypergraph import (
    Cycle,
    Hypergraph,
    _cycle_through_edge,
    _incidence_adj,
    components,
    delete_hyperedges,
    delete_vertices,
    is_acyclic,
    is_k_uniform,
    is_linear,
    on_cycle_elements,
    shortest_cycle,
)

__all__ = [
    "FvsResult",
    "FesResult",
    "feedback_vertex_set",
    "minimal_fes",
    "is_acyclic",
    "fes_size_bound",
]

TraceStep = tuple[str, tuple[int, ...]]


@dataclass(frozen=True)
class FvsResult:
    """Feedback vertex set of size at most floor(m/3), plus the recursion trace.

    Each trace step is (rule name, involved ids). Deleting removed_vertices
    from the input hypergraph leaves it acyclic.
    """

    removed_vertices: frozenset[int]
    trace: tuple[TraceStep, ...]


@dataclass(frozen=True)
class FesResult:
    """Minimal feedback edge set: deleting it leaves the hypergraph acyclic,
    and re-adding any single removed hyperedge recreates a cycle."""

    removed_hyperedges: frozenset[int]


def _rotate_edge_first(cycle: Cycle, eid: int) -> tuple[list[int], list[int]]:
    """Relabel the cycle so that hyperedge eid comes first.

    Both orientations are considered and the lexicographically smaller
    (vertices, hyperedges) labeling wins, so the outcome is deterministic.
    """
    vs, es = list(cycle.vertices), list(cycle.hyperedge_ids)
    rvs = [vs[0]] + vs[:0:-1]
    res = es[::-1]
    cands = []
    for seq_v, seq_e in ((vs, es), (rvs, res)):
        i = seq_e.index(eid)
        cands.append((tuple(seq_v[i:] + seq_v[:i]), tuple(seq_e[i:] + seq_e[:i])))
    best = min(cands)
    return list(best[0]), list(best[1])


def feedback_vertex_set(h: Hypergraph) -> FvsResult:
    """Feedback vertex set of a linear 3-uniform hypergraph, size <= floor(m/3).

    Rules, tried in order at every level (isolated vertices are never
    touched):

    1. at most 2 hyperedges left: done (a linear cycle needs 3);
    2. some non-isolated vertex or hyperedge lies on no cycle: drop it;
    3. some vertex has degree >= 3: take it, drop it (kills >= 3 hyperedges);
    4. some vertex v has degree 1: its hyperedge e1 lies on a cycle
       v1 e1 v2 e2 v3 ...; take v3 and drop hyperedges e1, e2, e3;
    5. otherwise the hypergraph is 2-regular: take a shortest cycle
       v1 e1 ... vk ek, let u_i be the third vertex of e_i and f_i the other
       hyperedge at u_i, and branch on k mod 3:
         k = 0 (mod 3): take {v_i : i = 0 mod 3}, drop the k cycle hyperedges;
         k = 1 (mod 3), f1 != f3 after rotating the labels by one if needed:
           take {u1, u3} and {v_i : i = 0 mod 3, 4 <= i <= k}, drop the cycle
           hyperedges plus f1, f3;
         k = 1 (mod 3), f1 = f3 and f2 = f4: then k must be 4; take {u2, u4},
           drop the cycle hyperedges plus f1, f2;
         k = 2 (mod 3): take {u1} and {v_i : i = 1 mod 3, 4 <= i <= k}, drop
           the cycle hyperedges plus f1.

    Every rule removes at least three hyperedges per taken vertex, which gives
    the floor(m/3) bound.
    """
    if not is_k_uniform(h, 3):
        raise NotThreeUniformError("feedback_vertex_set requires a 3-uniform hypergraph")
    if not is_linear(h):
        raise NotLinearError("feedback_vertex_set requires a linear hypergraph")

    removed: set[int] = set()
    trace: list[TraceStep] = []
    cur = h
    while True:
        if cur.num_hyperedges <= 2:
            trace.append(("base", ()))
            break

        verts_on, edges_on = on_cycle_elements(cur)

        off_vertex = next((v for v in sorted(cur.non_isolated_vertices()) if v not in verts_on), None)
        if off_vertex is not None:
            trace.append(("drop_off_cycle_vertex", (off_vertex,)))
            cur = delete_vertices(cur, (off_vertex,))
            continue
        off_edge = next((e for e in cur.hyperedge_ids if e not in edges_on), None)
        if off_edge is not None:
            trace.append(("drop_off_cycle_hyperedge", (off_edge,)))
            cur = delete_hyperedges(cur, (off_edge,))
            continue

        high = next((v for v in sorted(cur.non_isolated_vertices()) if cur.degree(v) >= 3), None)
        if high is not None:
            removed.add(high)
            trace.append(("take_high_degree_vertex", (high,)))
            cur = delete_vertices(cur, (high,))
            continue

        pendant = next((v for v in sorted(cur.non_isolated_vertices()) if cur.degree(v) == 1), None)
        if pendant is not None:
            e1 = cur.incident(pendant)[0]
            cyc = _cycle_through_edge(cur, _incidence_adj(cur), e1)
            assert cyc is not None  # rule 2 left every hyperedge on a cycle
            vs, es = _rotate_edge_first(cyc, e1)
            v3 = vs[2]
            removed.add(v3)
            trace.append(("take_vertex_past_pendant_edge", (pendant, e1, es[1], es[2], v3)))
            cur = delete_hyperedges(cur, es[:3])
            continue

        # 2-regular from here on: no isolated, degree-1, or degree>=3 vertices.
        cyc = shortest_cycle(cur)
        assert cyc is not None
        vs, es = list(cyc.vertices), list(cyc.hyperedge_ids)
        k = len(es)

        def third(i: int) -> int:
            spine = {vs[i], vs[(i + 1) % k]}
            rest = cur.hyperedge(es[i]) - spine
            assert len(rest) == 1
            return next(iter(rest))

        us = [third(i) for i in range(k)]

        def other_edge(u: int, ei: int) -> int:
            rest = [f for f in cur.incident(u) if f != ei]
            assert len(rest) == 1 and rest[0] not in es
            return rest[0]

        fs = [other_edge(us[i], es[i]) for i in range(k)]

        if k % 3 == 0:
            take = [vs[i - 1] for i in range(1, k + 1) if i % 3 == 0]
            removed.update(take)
            trace.append(("break_cycle_len_0_mod_3", (k, *take)))
            cur = delete_hyperedges(cur, es)
        elif k % 3 == 1:
            if fs[0] != fs[2] or fs[1] != fs[3]:
                if fs[0] == fs[2]:
                    # Rotating all labels by one turns (f2, f4) into the new
                    # (f1, f3), which differ here.
                    vs = vs[1:] + vs[:1]
                    es = es[1:] + es[:1]
                    us = us[1:] + us[:1]
                    fs = fs[1:] + fs[:1]
                take = [us[0], us[2]] + [vs[i - 1] for i in range(4, k + 1) if i % 3 == 0]
                removed.update(take)
                trace.append(("break_cycle_len_1_mod_3", (k, *take)))
                cur = delete_hyperedges(cur, set(es) | {fs[0], fs[2]})
            else:
                # f1 = f3 and f2 = f4 force a 4-cycle through u1, u3, so the
                # shortest cycle itself has length exactly 4.
                assert k == 4
                take = [us[1], us[3]]
                removed.update(take)
                trace.append(("break_cycle_len_4_paired_detours", (k, *take)))
                cur = delete_hyperedges(cur, set(es) | {fs[0], fs[1]})
        else:
            take = [us[0]] + [vs[i - 1] for i in range(4, k + 1) if i % 3 == 1]
            removed.update(take)
            trace.append(("break_cycle_len_2_mod_3", (k, *take)))
            cur = delete_hyperedges(cur, set(es) | {fs[0]})

    return FvsResult(frozenset(removed), tuple(trace))


def minimal_fes(h: Hypergraph) -> FesResult:
    """Minimal feedback edge set, from the greedy scan in hyperedge id order.

    Starting from the trivial feedback edge set (all hyperedges), each
    hyperedge is dropped from it when the rest still meets every cycle,
    equivalently when re-adding the hyperedge to the kept acyclic part closes
    no cycle. An incremental union-find over the incidence forest implements
    that test; a hyperedge closes a cycle exactly when two of its vertices are
    already connected.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    removed: list[int] = []
    for eid in h.hyperedge_ids:
        e = h.hyperedge(eid)
        roots = set()
        closes = False
        for v in e:
            if v not in parent:
                parent[v] = v
            r = find(v)
            if r in roots:
                closes = True
                break
            roots.add(r)
        if closes:
            removed.append(eid)
        else:
            rroot = None
            for r in roots:
                if rroot is None:
                    rroot = r
                else:
                    parent[r] = rroot
    return FesResult(frozenset(removed))


def fes_size_bound(h: Hypergraph) -> int:
    """The guaranteed bound 2m - |V'| + p for a minimal feedback edge set of a
    linear 3-uniform hypergraph: V' = non-isolated vertices, p = number of
    components containing at least one hyperedge."""
    non_isolated = h.non_isolated_vertices()
    p = sum(1 for c in components(h) if c.hyperedge_ids)
    return 2 * h.num_hyperedges - len(non_isolated) + p
