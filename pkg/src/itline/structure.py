"""Degree classes, branches, pendent cycles, and exact trail searches.

A branch is a maximal nontrivial path whose ends have degree != 2 and whose
internal vertices all have degree 2.  A cycle attached to exactly one such
end is kept as a *closed* branch (both endpoints equal, ``is_closed`` set);
components that are bare cycles of degree-2 vertices contribute no branches.

The trail searches (maximum trail, dominating trail) are exact backtracking
with memoized pruning; on budget exhaustion they report Unknown rather than
None.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .budget import Budget, BudgetExhausted, Unknown
from .graphcore import (
    DisconnectedGraphError,
    InputError,
    MultiGraph,
    Trail,
    is_connected,
    trivial_trail,
)


@dataclass(frozen=True)
class DegreeClasses:
    """Partition of the vertex set by degree, with the derived high/low classes."""

    by_degree: Mapping[int, frozenset[int]]
    v_ge3: frozenset[int]
    w: frozenset[int]

    def of(self, i: int) -> frozenset[int]:
        return self.by_degree.get(i, frozenset())


def degree_classes(g: MultiGraph) -> DegreeClasses:
    by_degree: dict[int, set[int]] = {}
    for v in range(g.vertex_count):
        by_degree.setdefault(g.degree(v), set()).add(v)
    frozen = {d: frozenset(vs) for d, vs in by_degree.items()}
    v_ge3 = frozenset(v for v in range(g.vertex_count) if g.degree(v) >= 3)
    w = frozenset(v for v in range(g.vertex_count) if g.degree(v) != 2)
    return DegreeClasses(frozen, v_ge3, w)


@dataclass(frozen=True)
class Branch:
    """Maximal path with ends of degree != 2 and degree-2 internal vertices."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    is_closed: bool
    touches_degree_one: bool

    @property
    def length(self) -> int:
        return len(self.edge_ids)


def _branch_walk(g: MultiGraph):
    """Walk out every branch; returns (branches, used-edge flags)."""
    deg = [g.degree(v) for v in range(g.vertex_count)]
    w_set = {v for v in range(g.vertex_count) if deg[v] != 2}
    used = [False] * g.edge_count
    found: list[Branch] = []
    for w in sorted(w_set):
        for start_eid in g.incidence[w]:
            if used[start_eid]:
                continue
            verts = [w]
            eids = []
            cur_v, cur_e = w, start_eid
            while True:
                used[cur_e] = True
                eids.append(cur_e)
                nxt = g.other_end(cur_e, cur_v)
                verts.append(nxt)
                if nxt in w_set:
                    break
                e1, e2 = g.incidence[nxt]
                cur_e = e2 if e1 == cur_e else e1
                cur_v = nxt
            closed = verts[0] == verts[-1]
            if not closed and verts[0] > verts[-1]:
                verts.reverse()
                eids.reverse()
            found.append(
                Branch(
                    tuple(verts),
                    tuple(eids),
                    is_closed=closed,
                    touches_degree_one=deg[verts[0]] == 1 or deg[verts[-1]] == 1,
                )
            )
    found.sort(key=lambda b: b.edge_ids)
    return found, used


def branches(g: MultiGraph) -> tuple[Branch, ...]:
    """All branches B(G), closed ones included; bare-cycle components yield none."""
    found, _ = _branch_walk(g)
    return tuple(found)


def branches_b1(g: MultiGraph) -> tuple[Branch, ...]:
    """Branches that touch a degree-1 vertex."""
    return tuple(b for b in branches(g) if b.touches_degree_one)


def cycle_component_edges(g: MultiGraph) -> tuple[tuple[int, ...], ...]:
    """Edge ids of each bare-cycle component (every vertex degree 2), in cyclic order."""
    _, used = _branch_walk(g)
    comps = []
    for eid in range(g.edge_count):
        if used[eid]:
            continue
        v0 = g.edges[eid][0]
        cyc = []
        cur_e, cur_v = eid, v0
        while True:
            used[cur_e] = True
            cyc.append(cur_e)
            cur_v = g.other_end(cur_e, cur_v)
            if cur_v == v0:
                break
            e1, e2 = g.incidence[cur_v]
            cur_e = e2 if e1 == cur_e else e1
        comps.append(tuple(cyc))
    return tuple(comps)


def pendent_cycles(g: MultiGraph) -> tuple[Trail, ...]:
    """Cycles meeting the degree->=3 vertex set in exactly one vertex.

    Cycles are edge sets here: a 2-cycle (two parallel edges) counts, and
    parallel alternatives along the same vertex sequence are distinct cycles.
    Each is returned as a closed trail starting at its smallest vertex.
    """
    n = g.vertex_count
    v3 = frozenset(v for v in range(n) if g.degree(v) >= 3)
    seen: set[frozenset[int]] = set()
    out: list[Trail] = []

    def record(verts: list[int], eids: list[int]) -> None:
        key = frozenset(eids)
        if key in seen:
            return
        seen.add(key)
        if len([v for v in verts if v in v3]) != 1:
            return
        # Canonical orientation: the direction with the smaller edge tuple.
        fwd = tuple(eids)
        rev = tuple(reversed(eids))
        if rev < fwd:
            verts = [verts[0]] + list(reversed(verts[1:]))
            eids = list(rev)
        out.append(Trail(tuple(verts) + (verts[0],), tuple(eids), True))

    inc = g.incidence
    for s in range(n):
        # Paths from s through vertices > s only, closing back at s.
        stack: list[tuple[int, list[int], list[int]]] = [(s, [s], [])]
        while stack:
            v, verts, eids = stack.pop()
            for eid in inc[v]:
                if eid in eids:
                    continue
                w = g.other_end(eid, v)
                if w == s:
                    if len(eids) >= 1:
                        record(verts, eids + [eid])
                    continue
                if w < s or w in verts:
                    continue
                stack.append((w, verts + [w], eids + [eid]))
    out.sort(key=lambda t: tuple(sorted(t.edge_ids)))
    return tuple(out)


@dataclass(frozen=True)
class MaxTrailResult:
    """A trail with the most distinct vertices, preferring coverage of degree->=3 vertices.

    ``mt_star`` counts distinct vertices of the witness; ``d3_star`` counts
    degree->=3 vertices the witness misses.
    """

    trail: Trail
    mt_star: int
    d3_star: int


def max_trail(
    g: MultiGraph,
    *,
    node_budget: int | None = None,
    time_limit: float | None = None,
) -> MaxTrailResult | Unknown:
    """Exhaustive search for a maximum trail.

    Objective: maximize the number of distinct vertices, then (tie-break)
    the number of degree->=3 vertices covered.  States (current vertex, used
    edges) determine all future extensions, so revisited states are skipped;
    an optimistic reachability bound prunes the rest.
    """
    if g.vertex_count == 0:
        raise InputError("max_trail requires a nonempty graph")
    if not is_connected(g):
        raise DisconnectedGraphError("max_trail requires a connected graph")
    n, m = g.vertex_count, g.edge_count
    v3_mask = 0
    for v in range(n):
        if g.degree(v) >= 3:
            v3_mask |= 1 << v
    v3_total = bin(v3_mask).count("1")
    edges = g.edges
    inc = g.incidence
    budget = Budget(node_budget, time_limit)

    # Best-so-far, seeded with the best trivial trail.
    if v3_mask:
        seed = (v3_mask & -v3_mask).bit_length() - 1
        best_cov = 1
    else:
        seed = 0
        best_cov = 0
    best_count = 1
    best_vs: tuple[int, ...] = (seed,)
    best_es: tuple[int, ...] = ()

    seen: set[tuple[int, int]] = set()
    path_v: list[int] = []
    path_e: list[int] = []

    def reach_mask(v: int, used: int) -> int:
        mask = 1 << v
        queue = [v]
        while queue:
            u = queue.pop()
            for eid in inc[u]:
                if used >> eid & 1:
                    continue
                a, b = edges[eid]
                w = b if a == u else a
                bit = 1 << w
                if not mask & bit:
                    mask |= bit
                    queue.append(w)
        return mask

    def extend(v: int, used: int, vmask: int, count: int, cov: int) -> None:
        nonlocal best_count, best_cov, best_vs, best_es
        budget.tick()
        key = (v, used)
        if key in seen:
            return
        seen.add(key)
        if count > best_count or (count == best_count and cov > best_cov):
            best_count, best_cov = count, cov
            best_vs, best_es = tuple(path_v), tuple(path_e)
        ub = vmask | reach_mask(v, used)
        ub_count = bin(ub).count("1")
        if ub_count < best_count:
            return
        if ub_count == best_count and bin(ub & v3_mask).count("1") <= best_cov:
            return
        for eid in inc[v]:
            if used >> eid & 1:
                continue
            a, b = edges[eid]
            w = b if a == v else a
            wbit = 1 << w
            new_vertex = not vmask & wbit
            path_v.append(w)
            path_e.append(eid)
            extend(
                w,
                used | 1 << eid,
                vmask | wbit,
                count + (1 if new_vertex else 0),
                cov + (1 if new_vertex and v3_mask & wbit else 0),
            )
            path_v.pop()
            path_e.pop()

    try:
        for start in range(n):
            path_v = [start]
            path_e = []
            extend(start, 0, 1 << start, 1, 1 if v3_mask >> start & 1 else 0)
    except BudgetExhausted as exc:
        return Unknown("max_trail", exc.spent, f"graph with {n} vertices, {m} edges")

    trail = Trail(best_vs, best_es, best_vs[0] == best_vs[-1])
    return MaxTrailResult(trail, best_count, v3_total - best_cov)


def dominates(g: MultiGraph, vertices: Iterable[int]) -> bool:
    """True iff every edge of ``g`` has at least one endpoint in ``vertices``."""
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges)


def find_dominating_trail(
    g: MultiGraph,
    closed: bool = False,
    *,
    node_budget: int | None = None,
    time_limit: float | None = None,
) -> Trail | None | Unknown:
    """First trail (closed, if requested) whose vertices touch every edge.

    Trivial one-vertex trails are admitted when a single vertex meets every
    edge (stars).  Returns None only after exhausting the trail space.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("dominating-trail search requires a connected graph")
    n, m = g.vertex_count, g.edge_count
    inc = g.incidence
    edges = g.edges
    for v in range(n):
        if len(inc[v]) == m:
            return trivial_trail(v)

    edge_vmask = [(1 << u) | (1 << v) for u, v in edges]
    budget = Budget(node_budget, time_limit)

    def dominated(vmask: int) -> bool:
        return all(vmask & em for em in edge_vmask)

    result: list[Trail] = []
    path_v: list[int] = []
    path_e: list[int] = []

    if closed:
        # A closed trail can start at its smallest vertex, so each start only
        # explores vertices >= start.
        def extend_closed(start: int, v: int, used: int, vmask: int, seen: set) -> bool:
            budget.tick()
            key = (v, used)
            if key in seen:
                return False
            seen.add(key)
            if v == start and used and dominated(vmask):
                result.append(Trail(tuple(path_v), tuple(path_e), True))
                return True
            for eid in inc[v]:
                if used >> eid & 1:
                    continue
                a, b = edges[eid]
                w = b if a == v else a
                if w < start:
                    continue
                path_v.append(w)
                path_e.append(eid)
                if extend_closed(start, w, used | 1 << eid, vmask | 1 << w, seen):
                    return True
                path_v.pop()
                path_e.pop()
            return False

        try:
            for start in range(n):
                path_v = [start]
                path_e = []
                if extend_closed(start, start, 0, 1 << start, set()):
                    return result[0]
        except BudgetExhausted as exc:
            return Unknown(
                "find_dominating_trail",
                exc.spent,
                f"closed search on graph with {n} vertices, {m} edges",
            )
        return None

    seen: set[tuple[int, int]] = set()

    def extend_open(v: int, used: int, vmask: int) -> bool:
        budget.tick()
        key = (v, used)
        if key in seen:
            return False
        seen.add(key)
        if dominated(vmask):
            result.append(Trail(tuple(path_v), tuple(path_e), path_v[0] == path_v[-1]))
            return True
        for eid in inc[v]:
            if used >> eid & 1:
                continue
            a, b = edges[eid]
            w = b if a == v else a
            path_v.append(w)
            path_e.append(eid)
            if extend_open(w, used | 1 << eid, vmask | 1 << w):
                return True
            path_v.pop()
            path_e.pop()
        return False

    try:
        for start in range(n):
            path_v = [start]
            path_e = []
            if extend_open(start, 0, 1 << start):
                return result[0]
    except BudgetExhausted as exc:
        return Unknown(
            "find_dominating_trail",
            exc.spent,
            f"open search on graph with {n} vertices, {m} edges",
        )
    return None
