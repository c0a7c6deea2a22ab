"""Graphs, vertex subsets, Cartesian products, and graph family generators.

Vertices are the integers 0..n-1.  Subsets are backed by int bitmasks so
that exhaustive subset searches stay cheap; the wrapper types below keep
the set-of-ints view for callers.  A product vertex (a, b) of G1 x G2 is
encoded as ``a * n2 + b`` everywhere (projections, fibers, witnesses).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

#: Default cap on the order of graphs fed to exact 2^n enumerations.
DEFAULT_EXACT_LIMIT = 24


class CapacityError(Exception):
    """An exact enumeration would exceed its configured budget."""


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class Graph:
    """Immutable simple undirected graph.

    ``adj_bits[v]`` is the neighbourhood of v as a bitmask.  Minimum and
    maximum degree are computed once at construction.  ``planar`` is a
    constructor-supplied flag (trees, grids, wheels, cycles set it True);
    planarity is never tested.
    """

    __slots__ = ("n", "adj_bits", "degrees", "delta_min", "delta_max", "planar", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), planar: bool | None = None):
        if n < 1:
            raise ValueError("graph order must be at least 1")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj_bits = tuple(adj)
        self.degrees = tuple(a.bit_count() for a in adj)
        self.delta_min = min(self.degrees)
        self.delta_max = max(self.degrees)
        self.planar = planar
        self._hash = hash((n, self.adj_bits))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(a)) for a in self.adj_bits)

    @property
    def is_regular(self) -> bool:
        return self.delta_min == self.delta_max

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj_bits[v]))

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj_bits[u] >> (u + 1)
            for w in _bits(rest):
                yield (u, u + 1 + w)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def vertex_set(self, members: Iterable[int]) -> "VertexSet":
        return VertexSet.of(members, self.n)

    @property
    def vertices(self) -> "VertexSet":
        return VertexSet(self.full_mask, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj_bits == other.adj_bits

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph of order ``universe_size``."""

    mask: int
    universe_size: int

    def __post_init__(self):
        if self.universe_size < 0:
            raise ValueError("universe size must be non-negative")
        if not 0 <= self.mask < (1 << self.universe_size):
            raise ValueError("set members out of range for the universe")

    @classmethod
    def of(cls, members: Iterable[int], universe_size: int) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < universe_size:
                raise ValueError(f"vertex {v} out of range for universe of size {universe_size}")
            mask |= 1 << v
        return cls(mask, universe_size)

    @property
    def members(self) -> frozenset[int]:
        return frozenset(_bits(self.mask))

    def to_sorted_list(self) -> list[int]:
        return list(_bits(self.mask))

    def complement(self) -> "VertexSet":
        full = (1 << self.universe_size) - 1
        return VertexSet(full & ~self.mask, self.universe_size)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe_size and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        return f"VertexSet({self.to_sorted_list()}, n={self.universe_size})"


def _check_universe(g: Graph, s: VertexSet) -> None:
    if s.universe_size != g.n:
        raise ValueError(f"set universe {s.universe_size} does not match graph order {g.n}")


@dataclass(frozen=True)
class SetDegreeView:
    """Per-vertex split degrees of a subset S: inside S, outside S, the
    boundary of S, and the number of edges induced by S."""

    in_degree: dict[int, int]
    out_degree: dict[int, int]
    boundary: VertexSet
    induced_edges: int


def degree_view(g: Graph, s: VertexSet) -> SetDegreeView:
    _check_universe(g, s)
    mask = s.mask
    in_deg = {}
    out_deg = {}
    boundary = 0
    inner_sum = 0
    for v in range(g.n):
        inside = (g.adj_bits[v] & mask).bit_count()
        in_deg[v] = inside
        out_deg[v] = g.degrees[v] - inside
        if inside and not (mask >> v & 1):
            boundary |= 1 << v
        if mask >> v & 1:
            inner_sum += inside
    return SetDegreeView(in_deg, out_deg, VertexSet(boundary, g.n), inner_sum // 2)


def induced_edge_count(g: Graph, s: VertexSet) -> int:
    """Number of edges of g with both endpoints in s."""
    _check_universe(g, s)
    mask = s.mask
    total = 0
    for v in _bits(mask):
        total += (g.adj_bits[v] & mask).bit_count()
    return total // 2


def boundary_set(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside s adjacent to at least one vertex of s."""
    _check_universe(g, s)
    nbr = 0
    for v in _bits(s.mask):
        nbr |= g.adj_bits[v]
    return VertexSet(nbr & ~s.mask & g.full_mask, g.n)


# ---------------------------------------------------------------------------
# Cartesian products


def product_vertex(a: int, b: int, n2: int) -> int:
    return a * n2 + b


def product_coords(v: int, n2: int) -> tuple[int, int]:
    return divmod(v, n2)


def cartesian_product(g1: Graph, g2: Graph, *, limit: int = DEFAULT_EXACT_LIMIT) -> Graph:
    """Cartesian product: (a,b) ~ (c,d) iff a=c and b~d, or b=d and a~c.

    The degree of (a,b) is deg(a) + deg(b).  Vertex (a,b) gets id a*n2+b.
    """
    n1, n2 = g1.n, g2.n
    if n1 * n2 > limit:
        raise CapacityError(f"product order {n1 * n2} exceeds limit {limit}")
    edges = []
    for a in range(n1):
        for (b, d) in g2.edges():
            edges.append((a * n2 + b, a * n2 + d))
    for (a, c) in g1.edges():
        for b in range(n2):
            edges.append((a * n2 + b, c * n2 + b))
    planar = None
    if n1 == 1:
        planar = g2.planar
    elif n2 == 1:
        planar = g1.planar
    return Graph(n1 * n2, edges, planar=planar)


def projections(a: VertexSet, n1: int, n2: int) -> tuple[VertexSet, VertexSet]:
    """Project a set of product vertices onto each factor."""
    if a.universe_size != n1 * n2:
        raise ValueError(f"set universe {a.universe_size} is not {n1}*{n2}")
    p1 = 0
    p2 = 0
    for v in _bits(a.mask):
        x, y = divmod(v, n2)
        p1 |= 1 << x
        p2 |= 1 << y
    return VertexSet(p1, n1), VertexSet(p2, n2)


def fiber(a: VertexSet, axis: int, coordinate: int, n1: int, n2: int) -> VertexSet:
    """Subset of a whose axis-th coordinate equals ``coordinate``."""
    if a.universe_size != n1 * n2:
        raise ValueError(f"set universe {a.universe_size} is not {n1}*{n2}")
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    bound = n1 if axis == 1 else n2
    if not 0 <= coordinate < bound:
        raise ValueError(f"coordinate {coordinate} out of range")
    mask = 0
    for v in _bits(a.mask):
        x, y = divmod(v, n2)
        if (x if axis == 1 else y) == coordinate:
            mask |= 1 << v
    return VertexSet(mask, n1 * n2)


def factor_box(s1: VertexSet, s2: VertexSet) -> VertexSet:
    """S1 x S2 as a set of encoded product vertices."""
    n2 = s2.universe_size
    mask = 0
    for a in _bits(s1.mask):
        for b in _bits(s2.mask):
            mask |= 1 << (a * n2 + b)
    return VertexSet(mask, s1.universe_size * n2)


# ---------------------------------------------------------------------------
# Independence number (exact)


@dataclass(frozen=True)
class FactorInvariants:
    order: int
    min_degree: int
    max_degree: int
    independence: int


def independence_number(g: Graph, *, limit: int = DEFAULT_EXACT_LIMIT) -> FactorInvariants:
    """Exact independence number by branch and bound over vertex bitmasks."""
    if g.n > limit:
        raise CapacityError(f"order {g.n} exceeds exact-solver limit {limit}")
    adj = g.adj_bits
    best = 0

    def grab(cand: int, size: int) -> None:
        nonlocal best
        while True:
            if size + cand.bit_count() <= best:
                return
            if cand == 0:
                best = size
                return
            # highest-degree vertex inside the candidate set
            pick, pick_deg = -1, -1
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                d = (adj[v] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = v, d
                m ^= low
            if pick_deg == 0:
                best = max(best, size + cand.bit_count())
                return
            grab(cand & ~(adj[pick] | (1 << pick)), size + 1)
            cand &= ~(1 << pick)

    grab(g.full_mask, 0)
    return FactorInvariants(g.n, g.delta_min, g.delta_max, best)


def vizing_alpha_bound(f1: FactorInvariants, f2: FactorInvariants) -> int:
    """a1*a2 + min(n1-a1, n2-a2): lower bound on the independence number
    of the Cartesian product of the two factors."""
    a1, a2 = f1.independence, f2.independence
    return a1 * a2 + min(f1.order - a1, f2.order - a2)


# ---------------------------------------------------------------------------
# Graph families (canonical labelings documented per family)


def path_graph(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], planar=True)


def cycle_graph(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; needs n >= 3."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], planar=True)


def star_graph(t: int) -> Graph:
    """Star with t leaves (order t+1); the center is vertex 0."""
    if t < 1:
        raise ValueError("star needs at least 1 leaf")
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)], planar=True)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges, planar=(n <= 4))


def wheel_graph(t: int) -> Graph:
    """Wheel with t rim vertices (order t+1); the hub is vertex 0."""
    if t < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, t + 1)]
    edges += [(i, i % t + 1) for i in range(1, t + 1)]
    return Graph(t + 1, edges, planar=True)


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (i,j) is i*cols+j.  Planar and triangle-free."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((i * cols + j, i * cols + j + 1))
            if i + 1 < rows:
                edges.append((i * cols + j, (i + 1) * cols + j))
    return Graph(rows * cols, edges, planar=True)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a seeded Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs at least 1 vertex")
    if n == 1:
        return Graph(1, [], planar=True)
    if n == 2:
        return Graph(2, [(0, 1)], planar=True)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges, planar=True)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi G(n, p)."""
    if n < 1:
        raise ValueError("graph needs at least 1 vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "wheel": 1,
    "grid": 2,
    "random_tree": 1,
}


def family(kind: str, *params: int, seed: int | None = None) -> Graph:
    """Dispatch to a named family generator; ``random_tree`` needs ``seed``."""
    if kind not in _FAMILY_ARITY:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(_FAMILY_ARITY)}")
    if len(params) != _FAMILY_ARITY[kind]:
        raise ValueError(f"family {kind!r} takes {_FAMILY_ARITY[kind]} parameter(s)")
    if kind == "path":
        return path_graph(params[0])
    if kind == "cycle":
        return cycle_graph(params[0])
    if kind == "star":
        return star_graph(params[0])
    if kind == "complete":
        return complete_graph(params[0])
    if kind == "wheel":
        return wheel_graph(params[0])
    if kind == "grid":
        return grid_graph(params[0], params[1])
    if seed is None:
        raise ValueError("random_tree requires a seed")
    return random_tree(params[0], seed)


# ---------------------------------------------------------------------------
# Edge-list I/O
#
# Format: first non-comment line is the vertex count; each following line is
# "u v" with 0-based ids; lines starting with '#' are comments.  Duplicate
# and self-loop edges are rejected.


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise EdgeListParseError("expected a single vertex count", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise EdgeListParseError(f"bad vertex count {parts[0]!r}", lineno) from None
            if n < 1:
                raise EdgeListParseError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2:
            raise EdgeListParseError("expected 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"bad edge {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"edge ({u},{v}) out of range for order {n}", lineno)
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(f"duplicate edge ({u},{v})", lineno)
        seen.add(key)
        edges.append((u, v))
    if n is None:
        raise EdgeListParseError("missing vertex count", 0)
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
