"""Independent brute-force oracles and fixture graphs for the test suite.

Everything here deliberately avoids the package's own algorithms: distances
via Floyd-Warshall, traceability via permutations, branches via filtered path
enumeration, witness nonemptiness via raw subset enumeration.  These are the
second route for every dual-checked result.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations

from itline.eup import canonical_candidate, check_conditions
from itline.graphcore import MultiGraph


def floyd_warshall(g: MultiGraph) -> list[list[float]]:
    n = g.vertex_count
    dist = [[math.inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = dist[i][k] + dist[k][j]
                if via < dist[i][j]:
                    dist[i][j] = via
    return dist


def brute_subgraph_distance(g: MultiGraph, a, b) -> float:
    dist = floyd_warshall(g)
    return min(dist[u][v] for u in a for v in b)


def brute_is_traceable(g: MultiGraph) -> bool:
    """Permutation check; only sensible for <= 8 vertices."""
    n = g.vertex_count
    if n == 1:
        return True
    nbrs = g.neighbor_sets
    return any(
        all(order[i + 1] in nbrs[order[i]] for i in range(n - 1))
        for order in permutations(range(n))
    )


def brute_is_hamiltonian(g: MultiGraph) -> bool:
    n = g.vertex_count
    if n == 1:
        return True
    if n == 2:
        return sum(1 for e in g.edges if set(e) == {0, 1}) >= 2
    nbrs = g.neighbor_sets
    for order in permutations(range(1, n)):
        cyc = (0,) + order
        if all(cyc[(i + 1) % n] in nbrs[cyc[i]] for i in range(n)):
            return True
    return False


def brute_branches(g: MultiGraph) -> set[frozenset[int]]:
    """Branch edge sets straight from the definition.

    Open branches: simple paths whose ends have degree != 2 and whose
    internal vertices have degree 2.  Closed branches: cycles through
    exactly one vertex of degree != 2, the rest degree 2.
    """
    deg = [g.degree(v) for v in range(g.vertex_count)]
    w = {v for v in range(g.vertex_count) if deg[v] != 2}
    found: set[frozenset[int]] = set()

    def walk(v: int, verts: list[int], eids: list[int], start: int) -> None:
        for eid in g.incidence[v]:
            if eid in eids:
                continue
            nxt = g.other_end(eid, v)
            if nxt == start and all(deg[x] == 2 for x in verts[1:]):
                found.add(frozenset(eids + [eid]))
                continue
            if nxt in verts:
                continue
            if nxt in w:
                if all(deg[x] == 2 for x in verts[1:]):
                    found.add(frozenset(eids + [eid]))
                continue
            walk(nxt, verts + [nxt], eids + [eid], start)

    for v in sorted(w):
        walk(v, [v], [], v)
    return found


def brute_witness_exists(g: MultiGraph, k: int, variant: str) -> bool:
    """Raw enumeration over every edge subset; canonical completeness makes
    edge-set enumeration sufficient."""
    m = g.edge_count
    v3 = any(g.degree(v) >= 3 for v in range(g.vertex_count))
    for size in range(m + 1):
        for chosen in combinations(range(m), size):
            if not chosen and not v3:
                continue
            cand = canonical_candidate(g, chosen)
            if check_conditions(g, cand, k, variant).overall:
                return True
    return False


def brute_all_trails(g: MultiGraph):
    """Every edge-distinct trail as a visited-vertex frozenset (plus whether
    it is closed), by plain unmemoized DFS."""
    out: list[tuple[frozenset[int], bool]] = []

    def extend(start: int, v: int, used: set[int], visited: frozenset[int]) -> None:
        out.append((visited, v == start))
        for eid in g.incidence[v]:
            if eid in used:
                continue
            w = g.other_end(eid, v)
            extend(start, w, used | {eid}, visited | {w})

    for s in range(g.vertex_count):
        extend(s, s, set(), frozenset({s}))
    return out


def brute_max_trail_stats(g: MultiGraph) -> tuple[int, int]:
    """(most distinct vertices, fewest missed degree->=3 vertices among those)."""
    v3 = {v for v in range(g.vertex_count) if g.degree(v) >= 3}
    best = (0, 0)
    for visited, _ in brute_all_trails(g):
        key = (len(visited), len(visited & v3))
        if key > best:
            best = key
    return best[0], len(v3) - best[1]


def brute_has_dominating_trail(g: MultiGraph, closed: bool) -> bool:
    for visited, is_closed in brute_all_trails(g):
        if closed and not is_closed:
            continue
        if all(u in visited or v in visited for u, v in g.edges):
            return True
    return False


def brute_simple_paths(g: MultiGraph, min_vertices: int = 3):
    """All simple paths with at least ``min_vertices`` vertices, one orientation each."""
    n = g.vertex_count
    nbrs = g.neighbor_sets
    out = []

    def extend(path: list[int]) -> None:
        if len(path) >= min_vertices and path[0] < path[-1]:
            out.append(tuple(path))
        for w in sorted(nbrs[path[-1]]):
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    for s in range(n):
        extend([s])
    return out


def is_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    """Brute-force isomorphism for small (multi)graphs."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    n = g1.vertex_count
    target = sorted(tuple(sorted(e)) for e in g2.edges)
    for perm in permutations(range(n)):
        mapped = sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g1.edges)
        if mapped == target:
            return True
    return False


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    return MultiGraph(10, tuple(outer + spokes + inner))


def two_pendant_cycles_graph() -> MultiGraph:
    """Path of 7 vertices with a 4-cycle glued at vertex 4 and a pair of
    parallel edges hanging from vertex 2: exactly two cycles, both meeting
    the degree->=3 set in one vertex."""
    edges = [(i, i + 1) for i in range(6)]
    edges += [(4, 7), (7, 8), (8, 9), (9, 4)]
    edges += [(2, 10), (2, 10)]
    return MultiGraph(11, tuple(edges))
