"""The three alliance predicates.

For non-empty S and vertex v, write d_S(v) for the number of neighbours of
v inside S.  The governing condition is

    d_S(v) >= d_notS(v) + k,     equivalently     2*d_S(v) >= deg(v) + k.

S is a defensive k-alliance when every v in S satisfies it, an offensive
k-alliance when every vertex of the boundary of S does (vacuously true for
an empty boundary), and a powerful k-alliance when it is both a defensive
k-alliance and an offensive (k+2)-alliance.
"""

from __future__ import annotations

import warnings
from enum import Enum

from .graph import Graph, VertexSet, _check_universe


class AllianceKind(Enum):
    DEFENSIVE = "defensive"
    OFFENSIVE = "offensive"
    POWERFUL = "powerful"

    def canonical_k_range(self, g: Graph) -> range:
        """Canonical k values: {-D..D} defensive, {2-D..D} offensive,
        {-D..D-2} powerful, where D is the maximum degree."""
        d = g.delta_max
        if self is AllianceKind.DEFENSIVE:
            return range(-d, d + 1)
        if self is AllianceKind.OFFENSIVE:
            return range(2 - d, d + 1)
        return range(-d, d - 1)


class CanonicalRangeWarning(UserWarning):
    """k lies outside the canonical range; the predicate is still total."""


def canonical_k_range(g: Graph, kind: AllianceKind | str) -> range:
    return AllianceKind(kind).canonical_k_range(g)


# Raw bitmask predicates.  These are the hot path for every enumeration in
# the package; they take adjacency masks and degree tuples directly.

def _defensive_ok(adj: tuple[int, ...], degrees: tuple[int, ...], mask: int, k: int) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if 2 * (adj[v] & mask).bit_count() < degrees[v] + k:
            return False
        m ^= low
    return True


def _offensive_ok(adj: tuple[int, ...], degrees: tuple[int, ...], mask: int, k: int) -> bool:
    nbr = 0
    m = mask
    while m:
        low = m & -m
        nbr |= adj[low.bit_length() - 1]
        m ^= low
    m = nbr & ~mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if 2 * (adj[v] & mask).bit_count() < degrees[v] + k:
            return False
        m ^= low
    return True


def _alliance_ok(g: Graph, mask: int, k: int, kind: AllianceKind) -> bool:
    """kind/k alliance predicate on a raw non-empty vertex mask."""
    if kind is AllianceKind.DEFENSIVE:
        return _defensive_ok(g.adj_bits, g.degrees, mask, k)
    if kind is AllianceKind.OFFENSIVE:
        return _offensive_ok(g.adj_bits, g.degrees, mask, k)
    return _defensive_ok(g.adj_bits, g.degrees, mask, k) and _offensive_ok(
        g.adj_bits, g.degrees, mask, k + 2
    )


def _validated_mask(g: Graph, s: VertexSet, k: int, kind: AllianceKind) -> int:
    _check_universe(g, s)
    if s.mask == 0:
        raise ValueError("alliances are non-empty; got the empty set")
    if k not in kind.canonical_k_range(g):
        warnings.warn(
            f"k={k} outside the canonical {kind.value} range "
            f"{kind.canonical_k_range(g)} for this graph",
            CanonicalRangeWarning,
            stacklevel=3,
        )
    return s.mask


def is_defensive_alliance(g: Graph, s: VertexSet, k: int) -> bool:
    """True iff every v in s has at least k more neighbours in s than outside."""
    kind = AllianceKind.DEFENSIVE
    return _defensive_ok(g.adj_bits, g.degrees, _validated_mask(g, s, k, kind), k)


def is_offensive_alliance(g: Graph, s: VertexSet, k: int) -> bool:
    """True iff every boundary vertex of s has at least k more neighbours in s
    than outside; vacuously true when the boundary is empty."""
    kind = AllianceKind.OFFENSIVE
    return _offensive_ok(g.adj_bits, g.degrees, _validated_mask(g, s, k, kind), k)


def is_powerful_alliance(g: Graph, s: VertexSet, k: int) -> bool:
    """Defensive k-alliance and offensive (k+2)-alliance simultaneously."""
    kind = AllianceKind.POWERFUL
    mask = _validated_mask(g, s, k, kind)
    return _defensive_ok(g.adj_bits, g.degrees, mask, k) and _offensive_ok(
        g.adj_bits, g.degrees, mask, k + 2
    )


def is_alliance(g: Graph, s: VertexSet, k: int, kind: AllianceKind | str) -> bool:
    kind = AllianceKind(kind)
    return _alliance_ok(g, _validated_mask(g, s, k, kind), k, kind)
