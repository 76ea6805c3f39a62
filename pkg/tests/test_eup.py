"""Condition checking and witness search for the subgraph families."""

import pytest
from hypothesis import given, settings

from itline.budget import Unknown
from itline.eup import (
    VARIANT_EU,
    VARIANT_EUP,
    canonical_candidate,
    check_conditions,
    find_witness,
    witness_to_json,
)
from itline.families import cycle, fig1, fig2, path, star
from itline.graphcore import (
    DisconnectedGraphError,
    InputError,
    MultiGraph,
    subgraph,
    subgraph_components,
    subgraph_distance,
)

from .conftest import connected_multigraphs
from .oracles import brute_witness_exists


def _hexagon(g):
    return canonical_candidate(
        g, [eid for eid, (u, v) in enumerate(g.edges) if u < 6 and v < 6]
    )


def test_fig2_hexagon_in_eu_at_k():
    for k in (2, 3):
        g = fig2(k)
        report = check_conditions(g, _hexagon(g), k, VARIANT_EU)
        assert report.overall, report.to_dict()


def test_fig2_hexagon_fails_pendant_condition_below_k():
    for k in (2, 3):
        g = fig2(k)
        report = check_conditions(g, _hexagon(g), k - 1, VARIANT_EUP)
        assert not report.overall
        assert not report.pendant_branches.ok
        assert report.parity.ok


def test_fig1_bottom_path_with_apex_is_eup2_member():
    g = fig1()
    h = subgraph(g, range(10), {11})
    report = check_conditions(g, h, 2, VARIANT_EUP)
    assert report.overall, report.to_dict()
    # The two components are the path and the apex, one step apart.
    assert len(subgraph_components(g, h)) == 2
    assert subgraph_distance(g, {11}, set(range(11))) == 1


def test_fig1_bottom_path_with_apex_fails_at_k1():
    g = fig1()
    h = subgraph(g, range(10), {11})
    report = check_conditions(g, h, 1, VARIANT_EUP)
    assert not report.proximity.ok


def test_parity_verdicts():
    g = path(5)
    h = subgraph(g, {0, 2})  # two disjoint edges: four odd vertices
    assert not check_conditions(g, h, 3, VARIANT_EUP).parity.ok
    assert not check_conditions(g, h, 3, VARIANT_EU).parity.ok
    single = subgraph(g, {1})
    assert check_conditions(g, single, 3, VARIANT_EUP).parity.ok
    assert not check_conditions(g, single, 3, VARIANT_EU).parity.ok


def test_coverage_verdicts():
    g = star(3)
    # Leaving the center out of H misses a degree->=3 vertex.
    h = subgraph(g, ())
    report = check_conditions(g, h, 2, VARIANT_EUP)
    assert not report.coverage.ok
    # A degree-1 isolated vertex is not allowed either.
    h2 = subgraph(path(3), (), {2})
    assert not check_conditions(path(3), h2, 2, VARIANT_EUP).coverage.ok


def test_eu_pendant_condition_ignores_h():
    # EU checks pendant branches unconditionally; EUP exempts branches H meets.
    g = fig2(3)
    h = canonical_candidate(g, range(g.edge_count))
    assert not check_conditions(g, h, 2, VARIANT_EU).pendant_branches.ok
    assert check_conditions(g, h, 2, VARIANT_EUP).pendant_branches.ok


def test_check_conditions_validates_subgraph():
    g = path(3)
    with pytest.raises(InputError):
        check_conditions(g, subgraph(path(5), {3}), 2, VARIANT_EUP)


def test_invalid_variant_and_k():
    g = path(3)
    with pytest.raises(InputError):
        check_conditions(g, subgraph(g, {0}), 2, "both")
    with pytest.raises(InputError):
        find_witness(g, 0, VARIANT_EUP)


# --- witness search ---------------------------------------------------------


def test_fig1_has_no_level1_witness_but_level2():
    g = fig1()
    assert find_witness(g, 1, VARIANT_EUP) is None
    w = find_witness(g, 2, VARIANT_EUP)
    assert w is not None
    assert check_conditions(g, w, 2, VARIANT_EUP).overall


def test_cycle_eu_witness_is_the_cycle_itself():
    g = cycle(6)
    w = find_witness(g, 1, VARIANT_EU)
    assert w.edge_ids == frozenset(range(6))
    assert not w.extra_vertices


def test_star_witnesses():
    g = star(4)
    w = find_witness(g, 2, VARIANT_EUP)
    assert w is not None


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        find_witness(MultiGraph(3, ((0, 1),)), 2, VARIANT_EUP)


def test_budget_exhaustion_returns_unknown():
    result = find_witness(fig2(3), 2, VARIANT_EUP, node_budget=3)
    assert isinstance(result, Unknown)
    assert result.operation == "find_witness"


def test_witness_json_shape():
    g = fig1()
    w = find_witness(g, 2, VARIANT_EUP)
    report = check_conditions(g, w, 2, VARIANT_EUP)
    payload = witness_to_json(w, report)
    assert set(payload) == {"edges", "isolated_vertices", "report"}
    assert payload["report"]["overall"] is True
    assert set(payload["report"]["conditions"]) == {
        "parity", "coverage", "proximity", "avoided_branches", "pendant_branches",
    }


@settings(deadline=None, max_examples=40)
@given(connected_multigraphs(max_vertices=5, max_extra_edges=3))
def test_search_matches_raw_enumeration(g):
    # Dual route: the pruned search against unstructured subset enumeration.
    for k in (1, 2):
        for variant in (VARIANT_EU, VARIANT_EUP):
            found = find_witness(g, k, variant)
            assert not isinstance(found, Unknown)
            assert (found is not None) == brute_witness_exists(g, k, variant)


@settings(deadline=None, max_examples=40)
@given(connected_multigraphs(max_vertices=6, max_extra_edges=4))
def test_found_witnesses_pass_their_own_audit(g):
    for variant in (VARIANT_EU, VARIANT_EUP):
        w = find_witness(g, 2, variant)
        if w is None or isinstance(w, Unknown):
            continue
        assert check_conditions(g, w, 2, variant).overall


@settings(deadline=None, max_examples=40)
@given(connected_multigraphs(max_vertices=6, max_extra_edges=4))
def test_eu_witness_is_eup_witness(g):
    w = find_witness(g, 2, VARIANT_EU)
    if w is None or isinstance(w, Unknown):
        return
    assert check_conditions(g, w, 2, VARIANT_EUP).overall


@settings(deadline=None, max_examples=40)
@given(connected_multigraphs(max_vertices=6, max_extra_edges=4))
def test_witness_monotone_in_k(g):
    for variant in (VARIANT_EU, VARIANT_EUP):
        w = find_witness(g, 2, variant)
        if w is None or isinstance(w, Unknown):
            continue
        assert check_conditions(g, w, 3, variant).overall


def test_proximity_equals_bipartition_reading():
    # The threshold-connectivity test must match the "every split has a close
    # cross pair" reading verbatim.
    from itertools import combinations

    from itline.eup import _proximity_components_ok
    from itline.graphcore import all_pairs_distances

    g = fig1()
    h = subgraph(g, (0, 1), {5, 8, 11})
    comps = subgraph_components(g, h)
    dist = all_pairs_distances(g)
    for k in (1, 2, 3, 4):
        ok, _ = _proximity_components_ok(comps, dist, k)
        p = len(comps)
        brute = True
        for r in range(1, p):
            for side in combinations(range(p), r):
                cross = min(
                    dist[u][v]
                    for i in side
                    for j in range(p)
                    if j not in side
                    for u in comps[i]
                    for v in comps[j]
                )
                if cross > k - 1:
                    brute = False
        assert ok == brute
