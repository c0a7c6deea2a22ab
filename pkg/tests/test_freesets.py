import random
import warnings

import pytest
from hypothesis import given
import hypothesis.strategies as st

from alliancekit import (
    AllianceKind,
    CanonicalRangeWarning,
    CapacityError,
    Graph,
    VertexSet,
    canonical_k_range,
    enumerate_minimal_alliances,
    free_set_monotone_witness,
    independence_number,
    is_alliance,
    is_cover_set,
    is_free_set,
    path_graph,
)

from conftest import graph_and_set, kinds, seeded_graph, seeded_subset


def test_free_set_examples():
    p3 = path_graph(3)
    assert is_free_set(p3, VertexSet(0, 3), 2, "offensive")
    assert is_free_set(p3, VertexSet.of([0, 1], 3), 2, "offensive")
    assert not is_free_set(p3, VertexSet.of([0, 2], 3), 2, "offensive")
    p5 = path_graph(5)
    assert is_free_set(p5, p5.vertices, 2, "defensive")  # tree, k >= 2


def test_cover_set_examples():
    p3 = path_graph(3)
    assert is_cover_set(p3, p3.vertices, 2, "offensive")
    assert is_cover_set(p3, VertexSet.of([2], 3), 2, "offensive")
    p2 = path_graph(2)
    assert not is_cover_set(p2, VertexSet(0, 2), -1, "defensive")


def test_minimal_families():
    p3 = path_graph(3)
    fam = enumerate_minimal_alliances(p3, 2, "offensive")
    assert [s.to_sorted_list() for s in fam] == [[0, 2]]
    edgeless = Graph(3)
    fam = enumerate_minimal_alliances(edgeless, 0, "defensive")
    assert [s.to_sorted_list() for s in fam] == [[0], [1], [2]]
    p2 = path_graph(2)
    assert len(enumerate_minimal_alliances(p2, 2, "defensive")) == 0


def test_family_order_is_cardinality_then_lex():
    rng = random.Random(5)
    for _ in range(20):
        g = seeded_graph(rng, rng.randint(2, 7))
        for kind in AllianceKind:
            for k in canonical_k_range(g, kind):
                fam = enumerate_minimal_alliances(g, k, kind)
                keys = [(len(s), s.to_sorted_list()) for s in fam]
                assert keys == sorted(keys)


def test_family_antichain():
    rng = random.Random(6)
    for _ in range(30):
        g = seeded_graph(rng, rng.randint(2, 7))
        kind = rng.choice(list(AllianceKind))
        ks = list(canonical_k_range(g, kind))
        if not ks:
            continue
        fam = enumerate_minimal_alliances(g, rng.choice(ks), kind)
        masks = fam.masks
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j:
                    assert a & b != a, "family contains comparable sets"


def test_certificate_equivalence_exhaustive():
    rng = random.Random(7)
    for _ in range(25):
        g = seeded_graph(rng, rng.randint(2, 6))
        kind = rng.choice(list(AllianceKind))
        k = rng.randint(-g.n, g.n)
        fam = enumerate_minimal_alliances(g, k, kind)
        for mask in range(1 << g.n):
            x = VertexSet(mask, g.n)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", CanonicalRangeWarning)
                assert is_free_set(g, x, k, kind) == fam.certifies_free(x)


@given(graph_and_set(), kinds, st.integers(-4, 4))
def test_duality(gs, kind, k):
    g, y = gs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        assert is_cover_set(g, y, k, kind) == is_free_set(g, y.complement(), k, kind)


@given(graph_and_set(), kinds, st.integers(-4, 3), st.integers(1, 3))
def test_free_monotone_in_k(gs, kind, k, step):
    g, x = gs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CanonicalRangeWarning)
        if is_free_set(g, x, k, kind):
            assert is_free_set(g, x, k + step, kind)


def test_monotone_witness():
    p3 = path_graph(3)
    assert free_set_monotone_witness(p3, VertexSet.of([0, 1], 3), 2, 3, "offensive")
    p5 = path_graph(5)
    assert free_set_monotone_witness(p5, p5.vertices, 2, 3, "defensive")
    assert free_set_monotone_witness(p3, VertexSet(0, 3), -1, 4, "powerful")
    with pytest.raises(ValueError):
        free_set_monotone_witness(p3, VertexSet(0, 3), 3, 2, "defensive")
    with pytest.raises(ValueError):
        # {0,2} is not offensive 2-free, so the precondition fails
        free_set_monotone_witness(p3, VertexSet.of([0, 2], 3), 2, 3, "offensive")


def test_independent_sets_are_free():
    rng = random.Random(8)
    for _ in range(30):
        g = seeded_graph(rng, rng.randint(2, 7))
        # greedy independent set
        mask = 0
        blocked = 0
        for v in range(g.n):
            if not (blocked >> v) & 1:
                mask |= 1 << v
                blocked |= g.adj_bits[v] | (1 << v)
        ind = VertexSet(mask, g.n)
        for k in range(1 - g.delta_min, g.delta_max + 1):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", CanonicalRangeWarning)
                assert is_free_set(g, ind, k, "defensive")


def test_every_member_is_a_minimal_alliance():
    rng = random.Random(9)
    for _ in range(20):
        g = seeded_graph(rng, rng.randint(2, 6))
        kind = rng.choice(list(AllianceKind))
        k = rng.randint(-3, 3)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", CanonicalRangeWarning)
            fam = enumerate_minimal_alliances(g, k, kind)
            for s in fam:
                assert is_alliance(g, s, k, kind)
                sub = (0 - s.mask) & s.mask
                while sub:
                    if sub != s.mask:
                        assert not is_alliance(g, VertexSet(sub, g.n), k, kind)
                    sub = (sub - s.mask) & s.mask


def test_capacity_errors():
    big = Graph(25)
    with pytest.raises(CapacityError):
        enumerate_minimal_alliances(big, 0, "defensive")
    with pytest.raises(CapacityError):
        is_free_set(big, big.vertices, 0, "defensive")
