"""Deterministic generators for the named example families and standard graphs.

Every generator documents its vertex layout so tests can refer to vertices by
role; vertex ids are assigned in the order the construction lists them.
"""

from __future__ import annotations

from itertools import combinations

from .graphcore import InputError, MultiGraph


def path(n: int) -> MultiGraph:
    """Path on ``n`` vertices, 0-1-...-(n-1)."""
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> MultiGraph:
    """Cycle on ``n`` >= 3 vertices (use two_cycle for the order-2 multigraph)."""
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(m: int) -> MultiGraph:
    """Star with center 0 and ``m`` >= 1 leaves."""
    if m < 1:
        raise InputError(f"star needs m >= 1 leaves, got {m}")
    return MultiGraph(m + 1, tuple((0, i) for i in range(1, m + 1)))


def complete(n: int) -> MultiGraph:
    if n < 1:
        raise InputError(f"complete needs n >= 1, got {n}")
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def two_cycle() -> MultiGraph:
    """The order-2 multigraph with two parallel edges."""
    return MultiGraph(2, ((0, 1), (0, 1)))


def fig1() -> MultiGraph:
    """Path of 11 vertices plus an apex joined to every third interior vertex.

    Vertices 0..10 form the path; vertex 11 is adjacent to 2, 5 and 8, so the
    degree-3 vertices are exactly {2, 5, 8, 11}.  12 vertices, 13 edges.
    """
    edges = [(i, i + 1) for i in range(10)]
    edges += [(2, 11), (5, 11), (8, 11)]
    return MultiGraph(12, tuple(edges))


def fig2(k: int) -> MultiGraph:
    """6-cycle with three pendant paths of length ``k`` at alternating vertices.

    Cycle vertices 0..5; paths attach at 0, 2 and 4 (pairwise non-adjacent).
    n = 6 + 3k.
    """
    if k < 1:
        raise InputError(f"fig2 needs k >= 1, got {k}")
    edges = [(i, (i + 1) % 6) for i in range(6)]
    nxt = 6
    for attach in (0, 2, 4):
        prev = attach
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return MultiGraph(nxt, tuple(edges))


def fig3(s: int, t: int) -> MultiGraph:
    """Two length-(t-1) pendant paths meeting at a hub, plus a tail into a K_4.

    Layout: x_1..x_t are 0..t-1, the hub w_1 is t, y_t..y_1 are t+1..2t,
    z_1..z_s are 2t+1..2t+s, and w_2..w_5 (the K_4) are 2t+s+1..2t+s+4.
    Requires t >= s + 5 so the long double path is the unique maximum trail;
    the top gadget is a full K_4 (4-cycle plus both chords), which is what
    makes all four of its vertices degree >= 3 and the trail statistics come
    out to 2t+1 covered vertices with 4 missed.  n = 2t + s + 5.
    """
    if s < 1 or t < 1:
        raise InputError(f"fig3 needs positive s, t, got ({s}, {t})")
    if t < s + 5:
        raise InputError(f"fig3 needs t >= s + 5, got s={s}, t={t}")
    w1 = t
    edges = [(i, i + 1) for i in range(t - 1)]           # x_1..x_t
    edges.append((t - 1, w1))                            # x_t - w_1
    edges.append((w1, t + 1))                            # w_1 - y_t
    edges += [(t + i, t + i + 1) for i in range(1, t)]   # y_t..y_1
    chain = [w1] + [2 * t + j for j in range(1, s + 1)] + [2 * t + s + 1]
    edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    k4 = [2 * t + s + 1 + i for i in range(4)]
    edges += list(combinations(k4, 2))
    return MultiGraph(2 * t + s + 5, tuple(edges))


def fig4b(s: int) -> MultiGraph:
    """Center with three pendant leaves and three length-(s+1) arms into disjoint K_4s.

    Vertex 0 is the center; 1..3 are its leaves; each arm j has internal
    vertices p_{j,1}..p_{j,s} followed by a K_4 whose first vertex is the
    attachment.  n = 3s + 16, 3s + 24 edges; the center is the unique vertex
    with 6 distinct neighbors, none of which has degree >= 3.
    """
    if s < 1:
        raise InputError(f"fig4b needs s >= 1, got {s}")
    edges = [(0, 1), (0, 2), (0, 3)]
    nxt = 4
    for _ in range(3):
        chain = [0] + [nxt + i for i in range(s)]
        nxt += s
        k4 = [nxt + i for i in range(4)]
        nxt += 4
        chain.append(k4[0])
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        edges += list(combinations(k4, 2))
    return MultiGraph(nxt, tuple(edges))
