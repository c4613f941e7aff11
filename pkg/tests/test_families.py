"""Arrangements, family specs, and graph construction."""

import pytest

from antimagic import (
    CYCLE,
    LATTICE,
    PATH,
    PRISM,
    FamilySpec,
    InvalidParameterError,
    SizeRefusalError,
    build_graph,
    canonical_edge,
    factor_arrangements,
    graph_from_edges,
    k2_graph,
    make_arrangement,
)
from antimagic.families import CONSECUTIVE_PATH, SKIP_CYCLE, SKIP_PATH


def test_canonical_edge_sorts_endpoints():
    assert canonical_edge((2, 1), (1, 1)) == ((1, 1), (2, 1))
    assert canonical_edge((1, 1), (1, 2)) == ((1, 1), (1, 2))
    with pytest.raises(InvalidParameterError):
        canonical_edge((1, 1), (1, 1))


def test_consecutive_path_listing():
    arr = make_arrangement(CONSECUTIVE_PATH, 4)
    assert arr.edges == ((1, 2), (2, 3), (3, 4))
    assert arr.traversal == (1, 2, 3, 4)


def test_skip_path_listing_and_traversal():
    arr = make_arrangement(SKIP_PATH, 6)
    assert arr.edges == ((1, 3), (2, 4), (3, 5), (4, 6), (5, 6))
    assert arr.traversal == (1, 3, 5, 6, 4, 2)
    # size 2 degenerates to the single edge (1, 2)
    assert make_arrangement(SKIP_PATH, 2).edges == ((1, 2),)
    assert make_arrangement(SKIP_PATH, 3).edges == ((1, 3), (2, 3))


def test_skip_cycle_listing_and_traversal():
    arr = make_arrangement(SKIP_CYCLE, 5)
    assert arr.edges == ((1, 2), (1, 3), (2, 4), (3, 5), (4, 5))
    assert arr.traversal == (1, 3, 5, 4, 2)
    assert make_arrangement(SKIP_CYCLE, 3).edges == ((1, 2), (1, 3), (2, 3))


@pytest.mark.parametrize("kind", [CONSECUTIVE_PATH, SKIP_PATH, SKIP_CYCLE])
@pytest.mark.parametrize("size", range(3, 26))
def test_traversal_walks_the_arrangement_once(kind, size):
    arr = make_arrangement(kind, size)
    assert sorted(arr.traversal) == list(range(1, size + 1))
    edge_set = set(arr.edges)
    steps = list(zip(arr.traversal, arr.traversal[1:]))
    if kind == SKIP_CYCLE:
        steps.append((arr.traversal[-1], arr.traversal[0]))
    walked = {canonical_edge(a, b) for a, b in steps}
    assert walked == edge_set
    assert len(steps) == len(arr.edges)


def test_arrangement_position_and_listing_maps():
    arr = make_arrangement(SKIP_PATH, 5)
    assert arr.positions() == {1: 1, 3: 2, 5: 3, 4: 4, 2: 5}
    assert arr.edge_listing_index() == {(1, 3): 1, (2, 4): 2, (3, 5): 3, (4, 5): 4}


@pytest.mark.parametrize(
    "kind,size",
    [(CONSECUTIVE_PATH, 1), (SKIP_PATH, 1), (SKIP_CYCLE, 2), ("ring", 5)],
)
def test_bad_arrangements_rejected(kind, size):
    with pytest.raises(InvalidParameterError):
        make_arrangement(kind, size)


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec(PATH, 1),
        FamilySpec(CYCLE, 2),
        FamilySpec(LATTICE, 0, 3),
        FamilySpec(LATTICE, 3, 0),
        FamilySpec(PRISM, 2, 1),
        FamilySpec(PRISM, 3, 0),
        FamilySpec("tree", 4),
        FamilySpec(PATH, True),
        FamilySpec(PATH, 2.0),
    ],
)
def test_invalid_specs_rejected(spec):
    with pytest.raises(InvalidParameterError):
        spec.validate()


@pytest.mark.parametrize(
    "spec,nv,ne",
    [
        (FamilySpec(PATH, 7), 8, 7),
        (FamilySpec(CYCLE, 7), 7, 7),
        (FamilySpec(LATTICE, 3, 5), 24, 38),
        (FamilySpec(LATTICE, 1, 1), 4, 4),
        (FamilySpec(PRISM, 4, 3), 16, 28),
        (FamilySpec(PRISM, 3, 1), 6, 9),
    ],
)
def test_counts_match_materialized_graph(spec, nv, ne):
    graph = build_graph(spec)
    assert spec.vertex_count() == nv == len(graph.vertices)
    assert spec.edge_count() == ne == len(graph.edges)


@pytest.mark.parametrize(
    "spec,row_kind,row_size,col_kind,col_size",
    [
        (FamilySpec(LATTICE, 1, 1), CONSECUTIVE_PATH, 2, CONSECUTIVE_PATH, 2),
        (FamilySpec(LATTICE, 1, 5), CONSECUTIVE_PATH, 2, SKIP_PATH, 6),
        (FamilySpec(LATTICE, 5, 1), SKIP_PATH, 6, CONSECUTIVE_PATH, 2),
        (FamilySpec(LATTICE, 3, 4), SKIP_PATH, 4, CONSECUTIVE_PATH, 5),
        (FamilySpec(LATTICE, 4, 4), SKIP_PATH, 5, CONSECUTIVE_PATH, 5),
        (FamilySpec(LATTICE, 4, 3), CONSECUTIVE_PATH, 5, SKIP_PATH, 4),
        (FamilySpec(PRISM, 5, 3), SKIP_CYCLE, 5, SKIP_PATH, 4),
        (FamilySpec(PRISM, 5, 1), SKIP_CYCLE, 5, CONSECUTIVE_PATH, 2),
    ],
)
def test_factor_dispatch(spec, row_kind, row_size, col_kind, col_size):
    row_arr, col_arr = factor_arrangements(spec)
    assert (row_arr.kind, row_arr.size) == (row_kind, row_size)
    assert (col_arr.kind, col_arr.size) == (col_kind, col_size)


def test_path_and_cycle_factors():
    row_arr, col_arr = factor_arrangements(FamilySpec(PATH, 6))
    assert (row_arr.kind, row_arr.size) == (SKIP_PATH, 7)
    assert col_arr is None
    row_arr, col_arr = factor_arrangements(FamilySpec(CYCLE, 6))
    assert (row_arr.kind, row_arr.size) == (SKIP_CYCLE, 6)
    assert col_arr is None


def test_build_graph_canonical_and_consistent():
    graph = build_graph(FamilySpec(LATTICE, 2, 3))
    assert graph.edges == sorted(graph.edges)
    assert len(set(graph.edges)) == len(graph.edges)
    assert all(e == canonical_edge(*e) for e in graph.edges)
    for v, neighbors in graph.adjacency.items():
        for w in neighbors:
            assert v in graph.adjacency[w]
    # grid degrees: every vertex touches one row edge or two, one col edge or two
    degrees = sorted(len(graph.adjacency[v]) for v in graph.vertices)
    assert degrees[0] >= 2 and degrees[-1] <= 4


def test_path_graph_is_a_path():
    graph = build_graph(FamilySpec(PATH, 6))
    degrees = sorted(len(graph.adjacency[v]) for v in graph.vertices)
    assert degrees == [1, 1] + [2] * 5
    # the two endpoints of the underlying path are vertices 1 and 2
    assert len(graph.adjacency[(1, 1)]) == 1
    assert len(graph.adjacency[(2, 1)]) == 1


def test_cycle_graph_is_a_cycle():
    graph = build_graph(FamilySpec(CYCLE, 7))
    assert all(len(graph.adjacency[v]) == 2 for v in graph.vertices)


def test_prism_graph_degrees():
    graph = build_graph(FamilySpec(PRISM, 4, 2))
    # the underlying path on columns runs 1, 3, 2, so column 3 is its middle
    for (i, j), neighbors in graph.adjacency.items():
        assert len(neighbors) == (4 if j == 3 else 3)


def test_materialization_cap():
    with pytest.raises(SizeRefusalError):
        build_graph(FamilySpec(LATTICE, 10_000, 10_000))


def test_graph_from_edges_validation():
    with pytest.raises(InvalidParameterError):
        graph_from_edges([((2, 1), (1, 1))])  # not canonical
    with pytest.raises(InvalidParameterError):
        graph_from_edges([((1, 1), (2, 1)), ((1, 1), (2, 1))])  # repeated
    graph = graph_from_edges([((1, 1), (2, 1)), ((1, 1), (3, 1))])
    assert graph.spec is None
    assert graph.vertices == [(1, 1), (2, 1), (3, 1)]


def test_k2_graph():
    graph = k2_graph()
    assert graph.edges == [((1, 1), (2, 1))]
    assert graph.spec is None
