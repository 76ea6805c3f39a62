"""Membership checking and witness search for the EU_k / EUP_k subgraph families.

A subgraph H of a connected graph G belongs to EU_k(G) when

  * parity: every vertex of H has even degree in H,
  * coverage: isolated vertices of H have degree >= 3 in G, and every
    degree->=3 vertex of G lies in H,
  * proximity: the components of H are mutually within distance k-1
    (formally, every split of the components has crossing distance <= k-1),
  * avoided branches: every branch of G edge-disjoint from H has at most
    k+1 edges,
  * pendant branches: every branch touching a degree-1 vertex has at most
    k edges.

EUP_k(G) relaxes parity to "at most two odd vertices" and restricts the
pendant-branch condition to branches edge-disjoint from H.  Nonemptiness of
these families characterizes hamiltonicity / traceability of the k-th
iterated line graph for k >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, BudgetExhausted, Unknown
from .graphcore import (
    DisconnectedGraphError,
    GraphError,
    InputError,
    MultiGraph,
    SubgraphH,
    all_pairs_distances,
    is_connected,
    odd_vertices,
    subgraph,
    subgraph_components,
    subgraph_degrees,
    subgraph_vertices,
)
from .structure import branches, cycle_component_edges

VARIANT_EU = "eu"
VARIANT_EUP = "eup"


def _norm_variant(variant: str) -> str:
    v = variant.lower()
    if v not in (VARIANT_EU, VARIANT_EUP):
        raise InputError(f"variant must be 'eu' or 'eup', got {variant!r}")
    return v


@dataclass(frozen=True)
class Verdict:
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition verdicts for one (H, k, variant) membership query."""

    variant: str
    k: int
    parity: Verdict
    coverage: Verdict
    proximity: Verdict
    avoided_branches: Verdict
    pendant_branches: Verdict

    @property
    def overall(self) -> bool:
        return (
            self.parity.ok
            and self.coverage.ok
            and self.proximity.ok
            and self.avoided_branches.ok
            and self.pendant_branches.ok
        )

    def to_dict(self) -> dict:
        def v(x: Verdict) -> dict:
            return {"ok": x.ok, "detail": x.detail}

        return {
            "variant": self.variant,
            "k": self.k,
            "overall": self.overall,
            "conditions": {
                "parity": v(self.parity),
                "coverage": v(self.coverage),
                "proximity": v(self.proximity),
                "avoided_branches": v(self.avoided_branches),
                "pendant_branches": v(self.pendant_branches),
            },
        }


def _proximity_components_ok(
    comps: tuple[frozenset[int], ...],
    dist: list[list[float]],
    k: int,
) -> tuple[bool, str]:
    """Components must be mutually linkable through gaps of at most k-1.

    Equivalent to: for every bipartition of the components, some cross pair
    is within distance k-1; checked as connectivity of the threshold graph.
    """
    p = len(comps)
    if p <= 1:
        return True, ""
    comp_lists = [sorted(c) for c in comps]
    threshold = k - 1
    linked = [[False] * p for _ in range(p)]
    for i in range(p):
        for j in range(i + 1, p):
            ok = any(
                dist[u][v] <= threshold for u in comp_lists[i] for v in comp_lists[j]
            )
            linked[i][j] = linked[j][i] = ok
    seen = [False] * p
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        i = stack.pop()
        for j in range(p):
            if linked[i][j] and not seen[j]:
                seen[j] = True
                reached += 1
                stack.append(j)
    if reached == p:
        return True, ""
    far = sorted(v for j in range(p) if not seen[j] for v in comp_lists[j])
    return False, f"components on vertices {far} are farther than {threshold} from the rest"


def check_conditions(g: MultiGraph, h: SubgraphH, k: int, variant: str) -> ConditionReport:
    """Evaluate every membership condition directly from its definition."""
    variant = _norm_variant(variant)
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    h = subgraph(g, h.edge_ids, h.extra_vertices)  # revalidates against g

    degs = subgraph_degrees(g, h)
    odd = sorted(odd_vertices(g, h))
    if variant == VARIANT_EU:
        if odd:
            parity = Verdict(False, f"odd degree in H at vertex {odd[0]}")
        else:
            parity = Verdict(True)
    else:
        if len(odd) > 2:
            parity = Verdict(False, f"{len(odd)} odd vertices in H: {odd}")
        else:
            parity = Verdict(True)

    v3 = frozenset(v for v in range(g.vertex_count) if g.degree(v) >= 3)
    verts = subgraph_vertices(g, h)
    isolated = sorted(v for v, d in degs.items() if d == 0)
    bad_isolated = [v for v in isolated if v not in v3]
    missing = sorted(v3 - verts)
    if bad_isolated:
        coverage = Verdict(
            False, f"isolated vertex {bad_isolated[0]} has degree {g.degree(bad_isolated[0])} < 3 in G"
        )
    elif missing:
        coverage = Verdict(False, f"degree->=3 vertex {missing[0]} is not in H")
    else:
        coverage = Verdict(True)

    comps = subgraph_components(g, h)
    ok, detail = _proximity_components_ok(comps, all_pairs_distances(g), k)
    proximity = Verdict(ok, detail)

    avoided = Verdict(True)
    pendant = Verdict(True)
    hedges = h.edge_ids
    for b in branches(g):
        disjoint = not (set(b.edge_ids) & hedges)
        if disjoint and b.length > k + 1 and avoided.ok:
            avoided = Verdict(
                False,
                f"branch {list(b.vertices)} with {b.length} edges avoids H (limit {k + 1})",
            )
        if b.touches_degree_one and b.length > k:
            if variant == VARIANT_EU or disjoint:
                if pendant.ok:
                    qualifier = "" if variant == VARIANT_EU else " and avoids H"
                    pendant = Verdict(
                        False,
                        f"pendant branch {list(b.vertices)} has {b.length} edges"
                        f"{qualifier} (limit {k})",
                    )
    return ConditionReport(variant, k, parity, coverage, proximity, avoided, pendant)


def canonical_candidate(g: MultiGraph, edge_ids) -> SubgraphH:
    """The unique coverage-satisfying subgraph with the given edge set.

    Degree->=3 vertices not touched by the edges become the subgraph's
    isolated vertices; any member of EU_k/EUP_k has exactly this shape, so
    searching over edge sets alone is complete.
    """
    edge_ids = frozenset(edge_ids)
    covered = set()
    for eid in edge_ids:
        u, v = g.endpoints(eid)
        covered.add(u)
        covered.add(v)
    extras = frozenset(
        v for v in range(g.vertex_count) if g.degree(v) >= 3 and v not in covered
    )
    return subgraph(g, edge_ids, extras)


def witness_to_json(h: SubgraphH, report: ConditionReport) -> dict:
    return {
        "edges": sorted(h.edge_ids),
        "isolated_vertices": sorted(h.extra_vertices),
        "report": report.to_dict(),
    }


def find_witness(
    g: MultiGraph,
    k: int,
    variant: str,
    *,
    node_budget: int | None = None,
    time_limit: float | None = None,
) -> SubgraphH | None | Unknown:
    """First member of EU_k(G) / EUP_k(G) in canonical search order, or None.

    The search walks edge decisions branch by branch (branch internals are
    contiguous, exclude tried before include), counting odd vertices as they
    finalize against the parity budget (0 for EU, 2 for EUP) and failing a
    branch as soon as it is fully avoided but too long.  Leaves only need the
    proximity check.  The empty subgraph is not considered a witness.
    """
    variant = _norm_variant(variant)
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if not is_connected(g):
        raise DisconnectedGraphError("witness search requires a connected graph")
    n, m = g.vertex_count, g.edge_count
    edges = g.edges
    v3 = [v for v in range(n) if g.degree(v) >= 3]
    blist = branches(g)

    if variant == VARIANT_EU:
        # The pendant condition for EU ignores H entirely, so it is decided
        # up front for the whole graph.
        for b in blist:
            if b.touches_degree_one and b.length > k:
                return None
    odd_budget = 0 if variant == VARIANT_EU else 2

    def fails_if_avoided(b) -> bool:
        if b.length > k + 1:
            return True
        return variant == VARIANT_EUP and b.touches_degree_one and b.length > k

    ordered = sorted(blist, key=lambda b: (not fails_if_avoided(b), -b.length, b.edge_ids))
    order: list[int] = []
    ebranch = [-1] * m
    bsize: list[int] = []
    bbad: list[bool] = []
    for bi, b in enumerate(ordered):
        bsize.append(b.length)
        bbad.append(fails_if_avoided(b))
        for eid in b.edge_ids:
            ebranch[eid] = bi
            order.append(eid)
    for cyc in cycle_component_edges(g):
        order.extend(cyc)
    if len(order) != m:
        raise GraphError("internal: branch partition missed edges")

    dist = all_pairs_distances(g)
    undecided = [g.degree(v) for v in range(n)]
    parity = [0] * n
    inS = bytearray(m)
    bdec = [0] * len(bsize)
    binc = [0] * len(bsize)
    odd_total = 0
    budget = Budget(node_budget, time_limit)
    found: list[SubgraphH] = []

    def leaf_check() -> bool:
        chosen = [e for e in range(m) if inS[e]]
        if not chosen and not v3:
            return False
        candidate = canonical_candidate(g, chosen)
        comps = subgraph_components(g, candidate)
        ok, _ = _proximity_components_ok(comps, dist, k)
        if not ok:
            return False
        report = check_conditions(g, candidate, k, variant)
        if not report.overall:
            raise GraphError(
                "internal: search produced a candidate its own recheck rejects"
            )
        found.append(candidate)
        return True

    def go(i: int) -> bool:
        nonlocal odd_total
        budget.tick()
        if i == m:
            return leaf_check()
        eid = order[i]
        u, v = edges[eid]
        bi = ebranch[eid]
        for take in (0, 1):
            undecided[u] -= 1
            undecided[v] -= 1
            if take:
                parity[u] ^= 1
                parity[v] ^= 1
                inS[eid] = 1
            added = 0
            if undecided[u] == 0 and parity[u]:
                added += 1
            if undecided[v] == 0 and parity[v]:
                added += 1
            odd_total += added
            viable = odd_total <= odd_budget
            if bi >= 0:
                bdec[bi] += 1
                binc[bi] += take
                if viable and bdec[bi] == bsize[bi] and binc[bi] == 0 and bbad[bi]:
                    viable = False
            if viable and go(i + 1):
                return True
            if bi >= 0:
                bdec[bi] -= 1
                binc[bi] -= take
            odd_total -= added
            if take:
                parity[u] ^= 1
                parity[v] ^= 1
                inS[eid] = 0
            undecided[u] += 1
            undecided[v] += 1
        return False

    try:
        if go(0):
            return found[0]
    except BudgetExhausted as exc:
        return Unknown(
            "find_witness",
            exc.spent,
            f"{variant} search at k={k} on graph with {n} vertices, {m} edges",
        )
    return None
