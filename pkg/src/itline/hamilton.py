"""Hamiltonicity oracles and the constructive lift from dominating trails.

The oracles are exact: bitmask dynamic programming up to ``dp_cap`` vertices
(default 20), depth-first backtracking with connectivity pruning above.  Both
report a vertex-order witness when the answer is yes.

The lifts turn a dominating (closed) trail of G into a hamiltonian path
(cycle) of the line graph: walk the trail and splice every non-trail edge in
at the first visit of one of its endpoints.  Outputs are re-verified against
an independently built line graph before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, BudgetExhausted, Unknown
from .graphcore import (
    DisconnectedGraphError,
    GraphError,
    InputError,
    MultiGraph,
    Trail,
    is_connected,
    validate_trail,
)
from .linegraph import line_graph

DEFAULT_DP_CAP = 20


@dataclass(frozen=True)
class OracleAnswer:
    """Yes/no with a vertex-order witness when the answer is yes."""

    value: bool
    order: tuple[int, ...] | None = None


def is_hamiltonian_path(g: MultiGraph, order: tuple[int, ...]) -> bool:
    """Independent verifier: does ``order`` list every vertex once along edges?"""
    if len(order) != g.vertex_count or set(order) != set(range(g.vertex_count)):
        return False
    nbrs = g.neighbor_sets
    return all(order[i + 1] in nbrs[order[i]] for i in range(len(order) - 1))


def is_hamiltonian_cycle(g: MultiGraph, order: tuple[int, ...]) -> bool:
    """Independent verifier for a hamiltonian cycle given as a vertex order.

    For two vertices the closing step reuses the endpoint pair, so a parallel
    edge is required; a single vertex is trivially hamiltonian.
    """
    if len(order) != g.vertex_count or set(order) != set(range(g.vertex_count)):
        return False
    n = g.vertex_count
    if n == 1:
        return True
    if n == 2:
        u, v = order
        return sum(1 for e in g.edges if set(e) == {u, v}) >= 2
    nbrs = g.neighbor_sets
    return all(order[(i + 1) % n] in nbrs[order[i]] for i in range(n))


def _adj_masks(g: MultiGraph) -> list[int]:
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _dp_path(adj: list[int], n: int) -> tuple[int, ...] | None:
    """Held–Karp reachability: dp[mask] = endpoints of paths covering mask."""
    size = 1 << n
    dp = [0] * size
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, size):
        if bin(mask).count("1") < 2:
            continue
        res = 0
        mm = mask
        while mm:
            vbit = mm & -mm
            mm ^= vbit
            v = vbit.bit_length() - 1
            if dp[mask ^ vbit] & adj[v]:
                res |= vbit
        dp[mask] = res
    full = size - 1
    if not dp[full]:
        return None
    endbit = dp[full] & -dp[full]
    order = [endbit.bit_length() - 1]
    mask = full
    while bin(mask).count("1") > 1:
        v = order[-1]
        mask ^= 1 << v
        cands = dp[mask] & adj[v]
        prevbit = cands & -cands
        order.append(prevbit.bit_length() - 1)
    order.reverse()
    return tuple(order)


def _dp_cycle(adj: list[int], n: int) -> tuple[int, ...] | None:
    """Anchor at vertex 0: dp over masks containing 0, close back to 0 at the end."""
    size = 1 << n
    dp = [0] * size
    dp[1] = 1
    for mask in range(1, size):
        if not mask & 1 or bin(mask).count("1") < 2:
            continue
        res = 0
        mm = mask ^ 1
        while mm:
            vbit = mm & -mm
            mm ^= vbit
            v = vbit.bit_length() - 1
            if dp[mask ^ vbit] & adj[v]:
                res |= vbit
        dp[mask] = res
    full = size - 1
    closers = dp[full] & adj[0] & ~1
    if not closers:
        return None
    endbit = closers & -closers
    order = [endbit.bit_length() - 1]
    mask = full
    while True:
        v = order[-1]
        mask ^= 1 << v
        if mask == 1:
            break
        cands = dp[mask] & adj[v]
        prevbit = cands & -cands
        order.append(prevbit.bit_length() - 1)
    order.append(0)
    order.reverse()
    return tuple(order)


def _backtrack(
    g: MultiGraph, cycle: bool, budget: Budget
) -> tuple[int, ...] | None:
    """Exact DFS with must-stay-connected pruning; raises BudgetExhausted."""
    n = g.vertex_count
    nbrs = [sorted(s) for s in g.neighbor_sets]
    nbr_sets = g.neighbor_sets
    leaf_like = [v for v in range(n) if len(nbr_sets[v]) <= 1]
    if cycle:
        if leaf_like:
            return None
        starts = [0]
    else:
        if len(leaf_like) > 2:
            return None
        starts = [min(leaf_like)] if leaf_like else list(range(n))
    visited = [False] * n
    path: list[int] = []

    def reach_ok(v: int) -> bool:
        # Everything unvisited must stay reachable from the current endpoint
        # through unvisited vertices only.
        target = n - len(path)
        if target == 0:
            return True
        seen = {v}
        stack = [v]
        count = 0
        while stack:
            u = stack.pop()
            for w in nbr_sets[u]:
                if w not in seen and not visited[w]:
                    seen.add(w)
                    stack.append(w)
                    count += 1
                    if count == target:
                        return True
        return count >= target

    def dfs(v: int) -> bool:
        budget.tick()
        if len(path) == n:
            return (0 in nbr_sets[v]) if cycle else True
        if not reach_ok(v):
            return False
        for w in nbrs[v]:
            if not visited[w]:
                visited[w] = True
                path.append(w)
                if dfs(w):
                    return True
                path.pop()
                visited[w] = False
        return False

    for s in starts:
        visited = [False] * n
        visited[s] = True
        path = [s]
        if dfs(s):
            return tuple(path)
    return None


def has_hamiltonian_path(
    g: MultiGraph,
    *,
    dp_cap: int = DEFAULT_DP_CAP,
    method: str = "auto",
    node_budget: int | None = None,
    time_limit: float | None = None,
) -> OracleAnswer | Unknown:
    """Exact traceability oracle with a vertex-order witness."""
    if not is_connected(g):
        raise DisconnectedGraphError("hamiltonicity oracle requires a connected graph")
    n = g.vertex_count
    if n == 1:
        return OracleAnswer(True, (0,))
    if method not in ("auto", "dp", "backtracking"):
        raise InputError(f"unknown method {method!r}")
    use_dp = method == "dp" or (method == "auto" and n <= dp_cap)
    if use_dp:
        order = _dp_path(_adj_masks(g), n)
        return OracleAnswer(order is not None, order)
    budget = Budget(node_budget, time_limit)
    try:
        order = _backtrack(g, cycle=False, budget=budget)
    except BudgetExhausted as exc:
        return Unknown(
            "has_hamiltonian_path", exc.spent, f"backtracking on {n} vertices"
        )
    return OracleAnswer(order is not None, order)


def has_hamiltonian_cycle(
    g: MultiGraph,
    *,
    dp_cap: int = DEFAULT_DP_CAP,
    method: str = "auto",
    node_budget: int | None = None,
    time_limit: float | None = None,
) -> OracleAnswer | Unknown:
    """Exact hamiltonicity oracle with a vertex-order witness."""
    if not is_connected(g):
        raise DisconnectedGraphError("hamiltonicity oracle requires a connected graph")
    n = g.vertex_count
    if n == 1:
        return OracleAnswer(True, (0,))
    if n == 2:
        ok = sum(1 for e in g.edges if set(e) == {0, 1}) >= 2
        return OracleAnswer(ok, (0, 1) if ok else None)
    if method not in ("auto", "dp", "backtracking"):
        raise InputError(f"unknown method {method!r}")
    use_dp = method == "dp" or (method == "auto" and n <= dp_cap)
    if use_dp:
        order = _dp_cycle(_adj_masks(g), n)
        return OracleAnswer(order is not None, order)
    budget = Budget(node_budget, time_limit)
    try:
        order = _backtrack(g, cycle=True, budget=budget)
    except BudgetExhausted as exc:
        return Unknown(
            "has_hamiltonian_cycle", exc.spent, f"backtracking on {n} vertices"
        )
    return OracleAnswer(order is not None, order)


# ---------------------------------------------------------------------------
# Lifting dominating trails into the line graph


def _check_dominating(g: MultiGraph, t: Trail) -> None:
    validate_trail(g, t)
    on_trail = set(t.vertices)
    for eid, (u, v) in enumerate(g.edges):
        if u not in on_trail and v not in on_trail:
            raise InputError(f"trail is not dominating: edge {eid}=({u},{v}) untouched")


def _line_trail(lg: MultiGraph, seq: list[int], closed: bool) -> Trail:
    index = {}
    for eid, (a, b) in enumerate(lg.edges):
        index[(a, b)] = eid
        index[(b, a)] = eid
    verts = seq + [seq[0]] if closed else seq
    eids = [index[(verts[i], verts[i + 1])] for i in range(len(verts) - 1)]
    return Trail(tuple(verts), tuple(eids), closed or len(verts) == 1)


def lift_trail_to_path(g: MultiGraph, t: Trail) -> Trail:
    """Hamiltonian path of the line graph built from a dominating trail of ``g``.

    Trail edges appear in trail order; every other edge is spliced in at the
    first visit of one of its endpoints, ascending edge id within a splice
    block.  The result is verified before being returned.
    """
    _check_dominating(g, t)
    first_pos: dict[int, int] = {}
    for i, v in enumerate(t.vertices):
        first_pos.setdefault(v, i)
    on_trail = set(t.edge_ids)
    pendant: list[list[int]] = [[] for _ in range(len(t.vertices))]
    for eid, (u, v) in enumerate(g.edges):
        if eid in on_trail:
            continue
        pos = min(
            (first_pos[x] for x in (u, v) if x in first_pos),
        )
        pendant[pos].append(eid)
    seq: list[int] = []
    for i in range(len(t.vertices)):
        seq.extend(pendant[i])
        if i < len(t.edge_ids):
            seq.append(t.edge_ids[i])
    lg = line_graph(g).graph
    if not is_hamiltonian_path(lg, tuple(seq)):
        raise GraphError("internal: lifted sequence is not a hamiltonian path")
    return _line_trail(lg, seq, closed=False)


def lift_closed_trail_to_cycle(g: MultiGraph, t: Trail) -> Trail:
    """Hamiltonian cycle of the line graph built from a dominating closed trail."""
    if not t.closed:
        raise InputError("lift_closed_trail_to_cycle requires a closed trail")
    if g.edge_count < 3:
        raise InputError("cycle lift requires at least three edges")
    _check_dominating(g, t)
    if t.is_trivial:
        # Star case: every edge shares the trail vertex, any order is a cycle.
        seq = list(range(g.edge_count))
    else:
        # Positions 1..t cover every trail vertex (the start reappears last),
        # so splicing after each trail edge closes up into a cycle.
        first_pos: dict[int, int] = {}
        for i in range(1, len(t.vertices)):
            first_pos.setdefault(t.vertices[i], i)
        on_trail = set(t.edge_ids)
        pendant: list[list[int]] = [[] for _ in range(len(t.vertices))]
        for eid, (u, v) in enumerate(g.edges):
            if eid in on_trail:
                continue
            pos = min(first_pos[x] for x in (u, v) if x in first_pos)
            pendant[pos].append(eid)
        seq = []
        for i in range(1, len(t.vertices)):
            seq.append(t.edge_ids[i - 1])
            seq.extend(pendant[i])
    lg = line_graph(g).graph
    if not is_hamiltonian_cycle(lg, tuple(seq)):
        raise GraphError("internal: lifted sequence is not a hamiltonian cycle")
    return _line_trail(lg, seq, closed=True)
