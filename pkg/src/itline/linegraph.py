"""The line-graph operator and its iteration, with edge-to-vertex provenance."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphcore import GraphError, InputError, MultiGraph


class EdgelessGraphError(GraphError):
    """The line graph of an edgeless graph is undefined."""

    def __init__(self, message: str, level: int | None = None):
        super().__init__(message)
        self.level = level


class CapExceededError(GraphError):
    """Iterated construction aborted: an intermediate graph exceeds the vertex cap."""

    def __init__(self, level: int, size: int, cap: int):
        super().__init__(
            f"line-graph iteration stopped at level {level}: "
            f"{size} vertices exceeds cap {cap}"
        )
        self.level = level
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class LineGraphResult:
    """A line graph together with the map from its vertices back to source edges."""

    graph: MultiGraph
    origin: tuple[int, ...]


def line_graph(g: MultiGraph) -> LineGraphResult:
    """Line graph of ``g``: one vertex per edge, adjacency = sharing an endpoint.

    The result is always simple; parallel edges of ``g`` share both endpoints
    and contribute a single adjacency.
    """
    m = g.edge_count
    if m == 0:
        raise EdgelessGraphError("line graph of an edgeless graph is undefined")
    pairs: set[tuple[int, int]] = set()
    for v in range(g.vertex_count):
        ids = g.incidence[v]
        for a, b in combinations(ids, 2):
            pairs.add((a, b) if a < b else (b, a))
    lg = MultiGraph(m, tuple(sorted(pairs)))
    return LineGraphResult(lg, tuple(range(m)))


def iterated_line_graph(g: MultiGraph, n: int, cap: int = 5000) -> MultiGraph:
    """Apply the line-graph operator ``n`` times.

    Sizes grow superexponentially, so the construction aborts with
    :class:`CapExceededError` as soon as the next level would exceed ``cap``
    vertices; callers that need exactness must widen the cap explicitly.
    """
    if n < 1:
        raise InputError(f"iteration count must be >= 1, got {n}")
    cur = g
    for level in range(1, n + 1):
        if cur.edge_count == 0:
            raise EdgelessGraphError(
                f"graph at level {level - 1} has no edges; level {level} is undefined",
                level=level,
            )
        if cur.edge_count > cap:
            raise CapExceededError(level=level, size=cur.edge_count, cap=cap)
        cur = line_graph(cur).graph
    return cur


def is_claw_free(g: MultiGraph) -> bool:
    """True iff no induced K_{1,3}: no vertex has three pairwise non-adjacent neighbors."""
    nbrs = g.neighbor_sets
    for v in range(g.vertex_count):
        around = sorted(nbrs[v])
        for i, a in enumerate(around):
            for j in range(i + 1, len(around)):
                b = around[j]
                if b in nbrs[a]:
                    continue
                for k in range(j + 1, len(around)):
                    c = around[k]
                    if c not in nbrs[a] and c not in nbrs[b]:
                        return False
    return True
