import warnings

import pytest
from hypothesis import given
import hypothesis.strategies as st

from alliancekit import (
    AllianceKind,
    CanonicalRangeWarning,
    VertexSet,
    canonical_k_range,
    complete_graph,
    cycle_graph,
    degree_view,
    is_alliance,
    is_defensive_alliance,
    is_offensive_alliance,
    is_powerful_alliance,
    path_graph,
    star_graph,
)

from conftest import graph_and_set, kinds


def test_defensive_examples():
    for g in (path_graph(4), cycle_graph(5), star_graph(3)):
        assert is_defensive_alliance(g, g.vertices, g.delta_min)
    p2 = path_graph(2)
    assert is_defensive_alliance(p2, VertexSet.of([0], 2), -1)  # 0 >= 1 + (-1)
    k4 = complete_graph(4)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        assert not is_defensive_alliance(k4, k4.vertices, 4)  # 3 >= 0 + 4 fails


def test_offensive_examples():
    p3 = path_graph(3)
    for g in (p3, complete_graph(4), cycle_graph(5)):
        for k in range(-5, 6):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", CanonicalRangeWarning)
                assert is_offensive_alliance(g, g.vertices, k)  # empty boundary
    assert is_offensive_alliance(p3, VertexSet.of([0, 2], 3), 2)
    assert not is_offensive_alliance(p3, VertexSet.of([1], 3), 2)


def test_powerful_examples():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        k3 = complete_graph(3)
        assert is_powerful_alliance(k3, k3.vertices, 2)
        for g in (path_graph(4), cycle_graph(4)):
            assert is_powerful_alliance(g, g.vertices, g.delta_min)
    # P2, S={0}, k=-1: defensive holds (0 >= 1-1) and the boundary vertex 1
    # has one neighbour in S and none outside, so offensive(+1) holds too
    p2 = path_graph(2)
    assert is_powerful_alliance(p2, VertexSet.of([0], 2), -1)
    assert is_defensive_alliance(p2, VertexSet.of([0], 2), -1)
    assert is_offensive_alliance(p2, VertexSet.of([0], 2), 1)


def test_empty_set_rejected():
    g = path_graph(3)
    for fn in (is_defensive_alliance, is_offensive_alliance, is_powerful_alliance):
        with pytest.raises(ValueError):
            fn(g, VertexSet(0, 3), 0)


def test_universe_mismatch_rejected():
    with pytest.raises(ValueError):
        is_defensive_alliance(path_graph(3), VertexSet.of([0], 4), 0)


def test_out_of_range_k_warns_but_evaluates():
    g = path_graph(3)  # max degree 2
    with pytest.warns(CanonicalRangeWarning):
        assert is_defensive_alliance(g, g.vertices, -5)
    with pytest.warns(CanonicalRangeWarning):
        assert not is_defensive_alliance(g, g.vertices, 5)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        is_defensive_alliance(g, g.vertices, 1)  # in range: no warning


def test_canonical_ranges():
    p3 = path_graph(3)
    assert list(canonical_k_range(p3, "defensive")) == [-2, -1, 0, 1, 2]
    assert list(canonical_k_range(p3, "offensive")) == [0, 1, 2]
    assert list(canonical_k_range(p3, "powerful")) == [-2, -1, 0]
    edgeless = complete_graph(1)
    assert list(canonical_k_range(edgeless, AllianceKind.OFFENSIVE)) == []
    assert list(canonical_k_range(edgeless, AllianceKind.POWERFUL)) == []


@given(graph_and_set(nonempty=True), kinds, st.integers(-5, 5), st.integers(1, 4))
def test_monotonicity_in_k(gs, kind, k, step):
    g, s = gs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        if is_alliance(g, s, k + step, kind):
            assert is_alliance(g, s, k, kind)


@given(graph_and_set(nonempty=True), st.integers(-4, 4))
def test_powerful_decomposition(gs, k):
    g, s = gs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        expected = is_defensive_alliance(g, s, k) and is_offensive_alliance(g, s, k + 2)
        assert is_powerful_alliance(g, s, k) == expected


@given(graph_and_set(min_order=1), st.integers(-4, 4))
def test_full_set_powerful_iff_defensive(gs, k):
    g, _ = gs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        assert is_powerful_alliance(g, g.vertices, k) == is_defensive_alliance(g, g.vertices, k)


@given(graph_and_set(nonempty=True), st.integers(-4, 4))
def test_half_degree_equivalence(gs, k):
    # per-vertex condition d_S(v) >= d_notS(v)+k is the same as 2*d_S(v) >= deg(v)+k
    g, s = gs
    view = degree_view(g, s)
    lhs = all(view.in_degree[v] >= view.out_degree[v] + k for v in s)
    rhs = all(2 * view.in_degree[v] >= g.degree(v) + k for v in s)
    assert lhs == rhs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        assert is_defensive_alliance(g, s, k) == lhs
