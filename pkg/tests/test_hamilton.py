"""Hamiltonicity oracles and the dominating-trail lifts."""

import pytest
from hypothesis import given, settings

from itline.budget import Unknown
from itline.families import complete, cycle, fig1, fig2, path, star, two_cycle
from itline.graphcore import InputError, MultiGraph, Trail, trivial_trail
from itline.hamilton import (
    has_hamiltonian_cycle,
    has_hamiltonian_path,
    is_hamiltonian_cycle,
    is_hamiltonian_path,
    lift_closed_trail_to_cycle,
    lift_trail_to_path,
)
from itline.linegraph import line_graph
from itline.structure import find_dominating_trail

from .conftest import connected_multigraphs
from .oracles import brute_is_hamiltonian, brute_is_traceable, petersen


def test_path_graph_oracles():
    g = path(6)
    assert has_hamiltonian_path(g).value
    assert not has_hamiltonian_cycle(g).value


def test_claw_not_traceable():
    assert not has_hamiltonian_path(star(3)).value


def test_petersen_traceable_not_hamiltonian():
    # Frozen via the 10-vertex dynamic program and confirmed by backtracking.
    g = petersen()
    for method in ("dp", "backtracking"):
        assert has_hamiltonian_path(g, method=method).value
        assert not has_hamiltonian_cycle(g, method=method).value


def test_two_cycle_is_hamiltonian():
    assert has_hamiltonian_cycle(two_cycle()).value
    assert has_hamiltonian_path(two_cycle()).value


def test_single_vertex_conventions():
    g = MultiGraph(1, ())
    assert has_hamiltonian_path(g).value
    assert has_hamiltonian_cycle(g).value


def test_single_edge_not_hamiltonian():
    assert not has_hamiltonian_cycle(path(2)).value


def test_witness_orders_verify():
    for g in (cycle(5), complete(4), petersen()):
        answer = has_hamiltonian_path(g)
        assert is_hamiltonian_path(g, answer.order)
    answer = has_hamiltonian_cycle(cycle(7))
    assert is_hamiltonian_cycle(cycle(7), answer.order)


def test_backtracking_budget_exhaustion_is_unknown():
    result = has_hamiltonian_path(petersen(), method="backtracking", node_budget=2)
    assert isinstance(result, Unknown)


@settings(deadline=None)
@given(connected_multigraphs(max_vertices=6, max_extra_edges=4))
def test_oracles_agree_with_permutation_check(g):
    assert has_hamiltonian_path(g).value == brute_is_traceable(g)
    assert has_hamiltonian_cycle(g).value == brute_is_hamiltonian(g)


@settings(deadline=None)
@given(connected_multigraphs(max_vertices=7, max_extra_edges=4))
def test_dp_and_backtracking_agree(g):
    dp = has_hamiltonian_path(g, method="dp")
    bt = has_hamiltonian_path(g, method="backtracking")
    assert dp.value == bt.value
    dpc = has_hamiltonian_cycle(g, method="dp")
    btc = has_hamiltonian_cycle(g, method="backtracking")
    assert dpc.value == btc.value


# --- lifts ------------------------------------------------------------------


def _path_trail(g, vertices):
    eids = []
    for i in range(len(vertices) - 1):
        want = {vertices[i], vertices[i + 1]}
        eids.append(next(e for e in g.incidence[vertices[i]]
                         if set(g.endpoints(e)) == want))
    return Trail(tuple(vertices), tuple(eids), vertices[0] == vertices[-1])


def test_lift_fig1_bottom_path():
    g = fig1()
    t = _path_trail(g, list(range(11)))
    lifted = lift_trail_to_path(g, t)
    lg = line_graph(g).graph
    assert is_hamiltonian_path(lg, lifted.vertices)
    assert len(lifted.vertices) == g.edge_count


def test_lift_single_edge_trail_of_claw():
    g = star(3)
    t = _path_trail(g, [0, 1])
    lifted = lift_trail_to_path(g, t)
    assert is_hamiltonian_path(line_graph(g).graph, lifted.vertices)
    assert sorted(lifted.vertices) == [0, 1, 2]


def test_lift_closed_cycle_trail():
    g = cycle(6)
    t = _path_trail(g, [0, 1, 2, 3, 4, 5, 0])
    lifted = lift_closed_trail_to_cycle(g, t)
    assert lifted.closed
    assert is_hamiltonian_cycle(line_graph(g).graph, lifted.vertices[:-1])


def test_lift_closed_fig2_hexagon():
    g = fig2(1)
    t = _path_trail(g, [0, 1, 2, 3, 4, 5, 0])
    lifted = lift_closed_trail_to_cycle(g, t)
    lg = line_graph(g).graph
    assert lg.vertex_count == 9
    assert is_hamiltonian_cycle(lg, lifted.vertices[:-1])


def test_lift_closed_triangle_of_k4():
    # A triangle dominates the whole K_4.
    g = complete(4)
    t = _path_trail(g, [0, 1, 2, 0])
    lifted = lift_closed_trail_to_cycle(g, t)
    assert is_hamiltonian_cycle(line_graph(g).graph, lifted.vertices[:-1])


def test_lift_trivial_trail_of_star():
    g = star(4)
    lifted = lift_closed_trail_to_cycle(g, trivial_trail(0))
    assert is_hamiltonian_cycle(line_graph(g).graph, lifted.vertices[:-1])


def test_lift_rejects_non_dominating_trail():
    g = fig2(2)
    t = _path_trail(g, [0, 1])
    with pytest.raises(InputError):
        lift_trail_to_path(g, t)


def test_cycle_lift_rejects_open_trail():
    g = cycle(6)
    t = _path_trail(g, [0, 1, 2])
    with pytest.raises(InputError):
        lift_closed_trail_to_cycle(g, t)


@settings(deadline=None)
@given(connected_multigraphs(max_vertices=6, max_extra_edges=4))
def test_lift_soundness_wherever_a_trail_exists(g):
    if g.edge_count == 0:
        return
    t = find_dominating_trail(g, closed=False)
    if t is None or isinstance(t, Unknown):
        return
    lifted = lift_trail_to_path(g, t)
    assert is_hamiltonian_path(line_graph(g).graph, lifted.vertices)


@settings(deadline=None)
@given(connected_multigraphs(max_vertices=6, max_extra_edges=4))
def test_closed_lift_soundness_wherever_a_closed_trail_exists(g):
    if g.edge_count < 3:
        return
    t = find_dominating_trail(g, closed=True)
    if t is None or isinstance(t, Unknown):
        return
    lifted = lift_closed_trail_to_cycle(g, t)
    assert is_hamiltonian_cycle(line_graph(g).graph, lifted.vertices[:-1])
