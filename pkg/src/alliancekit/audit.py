"""Randomized and scripted verification of the product/factor claims.

Every numbered claim the package relies on gets an auditor: seeded random
factor graphs (plus scripted family instances) are drawn, each claim's
hypothesis is checked exactly, trials whose hypothesis never holds are
skipped and counted, and the conclusion is asserted with the exact solvers.
All claims are proved facts, so a failure is evidence of an implementation
bug; failures carry a greedily minimized counterexample (vertex deletions
that preserve the failure).

An audit that never saw a hypothesis-satisfying trial is flagged
inconclusive rather than passed.  Reports are deterministic functions of
the configuration.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .alliances import AllianceKind, is_defensive_alliance
from .freesets import is_free_set
from .graph import (
    DEFAULT_EXACT_LIMIT,
    Graph,
    VertexSet,
    cartesian_product,
    cycle_graph,
    complete_graph,
    factor_box,
    grid_graph,
    independence_number,
    path_graph,
    projections,
    random_tree,
    star_graph,
    vizing_alpha_bound,
    wheel_graph,
)
from .phi import phi_value

DEF = AllianceKind.DEFENSIVE
OFF = AllianceKind.OFFENSIVE
POW = AllianceKind.POWERFUL

THEOREM_IDS = (
    "remark1",
    "th1_i",
    "th1_ii",
    "cor_CoroTh1def_i",
    "cor_CoroTh1def_ii",
    "prop_remarktree",
    "th_factor_recovery",
    "cor_otrocoro",
    "prop_iff_regular",
    "th1of",
    "cor_coronofensive",
    "th_union",
    "cor_union",
    "phi_p_lower",
    "th1p_i",
    "th1p_ii",
    "cor_coroproductpowerful_i",
    "cor_coroproductpowerful_ii",
    "vizing_alpha",
)

_EDGE_PROBS = (0.3, 0.5, 0.7)


@dataclass(frozen=True)
class AuditConfig:
    """Knobs for the audit harness.

    Each auditor sweeps k over the canonical range intersected with the
    claim's stated range; the sweep is not configurable.
    """

    seed: int = 987620
    max_factor_order: int = 4
    max_product_order: int = 16
    trials_per_theorem: int = 50

    def __post_init__(self):
        if self.max_factor_order < 2:
            raise ValueError("max_factor_order must be at least 2")
        if self.max_factor_order**2 > DEFAULT_EXACT_LIMIT:
            raise ValueError(
                f"max_factor_order**2 exceeds the exact-solver limit {DEFAULT_EXACT_LIMIT}"
            )
        if not 4 <= self.max_product_order <= DEFAULT_EXACT_LIMIT:
            raise ValueError("max_product_order must lie in [4, exact-solver limit]")
        if self.trials_per_theorem < 0:
            raise ValueError("trials_per_theorem must be non-negative")

    def to_record(self) -> dict:
        return {
            "seed": self.seed,
            "max_factor_order": self.max_factor_order,
            "max_product_order": self.max_product_order,
            "trials_per_theorem": self.trials_per_theorem,
        }


@dataclass
class AuditReport:
    theorem_id: str
    trials: int
    passes: int
    failures: list[dict]
    skipped: int
    checks: int
    config: AuditConfig

    @property
    def inconclusive(self) -> bool:
        return self.trials == 0

    @property
    def ok(self) -> bool:
        return not self.failures and not self.inconclusive

    def to_record(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "trials": self.trials,
            "passes": self.passes,
            "failures": self.failures,
            "skipped": self.skipped,
            "checks": self.checks,
            "inconclusive": self.inconclusive,
            "config": self.config.to_record(),
        }

    def to_lines(self) -> list[str]:
        c = self.config
        head = (
            f"theorem={self.theorem_id} trials={self.trials} passes={self.passes}"
            f" failures={len(self.failures)} skipped={self.skipped} checks={self.checks}"
            f" inconclusive={str(self.inconclusive).lower()}"
            f" seed={c.seed} factor<={c.max_factor_order} product<={c.max_product_order}"
            f" trials_per_theorem={c.trials_per_theorem}"
        )
        lines = [head]
        for f in self.failures:
            lines.append("  counterexample " + json.dumps(f, sort_keys=True))
        return lines


class _Tally:
    def __init__(self):
        self.trials = 0
        self.passes = 0
        self.failures: list[dict] = []
        self.skipped = 0
        self.checks = 0

    def add(self, checks_run: int, failures: list[dict]) -> None:
        if checks_run == 0:
            self.skipped += 1
            return
        self.trials += 1
        self.checks += checks_run
        if failures:
            # one merged payload per failing instance keeps passes+failures=trials
            merged = failures[0]
            if len(failures) > 1:
                merged = dict(merged)
                merged["additional_failing_checks"] = len(failures) - 1
            self.failures.append(merged)
        else:
            self.passes += 1


# ---------------------------------------------------------------------------
# Instance drawing


def _er(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def _draw_graph(
    rng: random.Random,
    max_order: int,
    accept: Callable[[Graph], bool] | None = None,
    min_order: int = 2,
    tries: int = 500,
) -> Graph:
    for _ in range(tries):
        n = rng.randint(min_order, max_order)
        g = _er(rng, n, rng.choice(_EDGE_PROBS))
        if accept is None or accept(g):
            return g
    raise RuntimeError("failed to draw an acceptable random graph")


def _draw_pair(
    rng: random.Random,
    config: AuditConfig,
    accept: Callable[[Graph], bool] | None = None,
) -> tuple[Graph, Graph]:
    for _ in range(500):
        g1 = _draw_graph(rng, config.max_factor_order, accept)
        g2 = _draw_graph(rng, config.max_factor_order, accept)
        if g1.n * g2.n <= config.max_product_order:
            return g1, g2
    raise RuntimeError("failed to draw an acceptable factor pair")


def _draw_subset(rng: random.Random, n: int) -> VertexSet:
    density = rng.choice((0.25, 0.5, 0.75))
    mask = 0
    for v in range(n):
        if rng.random() < density:
            mask |= 1 << v
    return VertexSet(mask, n)


def _draw_small_subset(rng: random.Random, n: int) -> VertexSet:
    if rng.random() < 0.5:
        return _draw_subset(rng, n)
    size = rng.randint(0, max(1, n // 2))
    return VertexSet.of(rng.sample(range(n), size), n)


def _draw_product_subset(rng: random.Random, g1: Graph, g2: Graph) -> VertexSet:
    """Half the time an unconstrained subset, half the time a subset of a
    small box A x B: its projections stay inside A and B, which keeps the
    free-projection hypotheses reachable."""
    if rng.random() < 0.5:
        return _draw_subset(rng, g1.n * g2.n)
    a = rng.sample(range(g1.n), rng.randint(1, max(1, g1.n // 2)))
    b = rng.sample(range(g2.n), rng.randint(1, max(1, g2.n // 2)))
    box = factor_box(VertexSet.of(a, g1.n), VertexSet.of(b, g2.n))
    mask = 0
    for v in box:
        if rng.random() < 0.7:
            mask |= 1 << v
    return VertexSet(mask, g1.n * g2.n)


def _has_edge(g: Graph) -> bool:
    return g.delta_max >= 1


def _max_deg_2(g: Graph) -> bool:
    # transfer-claim hypotheses need a k-range wide enough for free sets
    return g.delta_max >= 2


def _degree_sum_3(g: Graph) -> bool:
    return g.delta_min + g.delta_max >= 3


def _pair_instances(
    rng: random.Random,
    config: AuditConfig,
    scripted: list[tuple[Graph, Graph]],
    accept: Callable[[Graph], bool] | None = None,
) -> list[tuple[Graph, Graph]]:
    fits = [
        (a, b)
        for a, b in scripted
        if a.n * b.n <= config.max_product_order
        and (accept is None or (accept(a) and accept(b)))
    ]
    out = fits[: config.trials_per_theorem]
    while len(out) < config.trials_per_theorem:
        out.append(_draw_pair(rng, config, accept))
    return out


def _scripted_pairs() -> list[tuple[Graph, Graph]]:
    return [
        (star_graph(3), path_graph(3)),
        (star_graph(3), path_graph(4)),
        (cycle_graph(4), path_graph(3)),
        (cycle_graph(3), path_graph(3)),
    ]


@lru_cache(maxsize=2048)
def _product(g1: Graph, g2: Graph) -> Graph:
    return cartesian_product(g1, g2)


class _FreeCache:
    """Memoised free-set queries against one fixed graph."""

    def __init__(self, g: Graph):
        self.g = g
        self._memo: dict[tuple[int, int, AllianceKind], bool] = {}

    def __call__(self, s: VertexSet, k: int, kind: AllianceKind) -> bool:
        key = (s.mask, k, kind)
        if key not in self._memo:
            self._memo[key] = is_free_set(self.g, s, k, kind)
        return self._memo[key]


# ---------------------------------------------------------------------------
# Counterexample minimization

_Verdict = Callable[[Graph, Graph | None, dict[str, VertexSet]], tuple[bool, object, object]]


def _graph_record(g: Graph | None) -> dict | None:
    if g is None:
        return None
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    keep = [u for u in range(g.n) if u != v]
    index = {u: i for i, u in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a != v and b != v]
    planar = True if g.planar else None  # vertex deletion preserves planarity
    return Graph(g.n - 1, edges, planar=planar), index


def _remap_sets(
    sets: dict[str, VertexSet],
    bindings: dict[str, str],
    which: str,
    v: int,
    index: dict[int, int],
    n1: int,
    n2: int,
) -> dict[str, VertexSet]:
    new_n1 = n1 - 1 if which == "g1" else n1
    new_n2 = n2 - 1 if which == "g2" else n2
    out = {}
    for name, vs in sets.items():
        binding = bindings[name]
        if binding == which:
            out[name] = VertexSet.of([index[u] for u in vs if u != v], len(index))
        elif binding == "product":
            members = []
            for pv in vs:
                a, b = divmod(pv, n2)
                if which == "g1":
                    if a == v:
                        continue
                    members.append(index[a] * new_n2 + b)
                else:
                    if b == v:
                        continue
                    members.append(a * new_n2 + index[b])
            out[name] = VertexSet.of(members, new_n1 * new_n2)
        else:
            out[name] = vs
    return out


def _shrink(
    verdict: _Verdict,
    g1: Graph,
    g2: Graph | None,
    sets: dict[str, VertexSet],
    bindings: dict[str, str],
) -> tuple[Graph, Graph | None, dict[str, VertexSet]]:
    """Greedy vertex deletion preserving failure of the verdict."""

    def fails(a: Graph, b: Graph | None, ss: dict[str, VertexSet]) -> bool:
        try:
            ok, _, _ = verdict(a, b, ss)
        except Exception:
            return False
        return not ok

    improved = True
    while improved:
        improved = False
        for which in ("g1", "g2"):
            g = g1 if which == "g1" else g2
            if g is None or g.n <= 1:
                continue
            other = g2 if which == "g1" else g1
            n1 = g1.n
            n2 = g2.n if g2 is not None else 1
            for v in range(g.n):
                shrunk, index = _delete_vertex(g, v)
                new_sets = _remap_sets(sets, bindings, which, v, index, n1, n2)
                a, b = (shrunk, g2) if which == "g1" else (g1, shrunk)
                if fails(a, b, new_sets):
                    g1, g2, sets = a, b, new_sets
                    improved = True
                    break
            if improved:
                break
    return g1, g2, sets


def _failure(
    verdict: _Verdict,
    g1: Graph,
    g2: Graph | None,
    sets: dict[str, VertexSet],
    bindings: dict[str, str],
    ks: dict[str, int],
    check: str,
) -> dict:
    try:
        g1m, g2m, setsm = _shrink(verdict, g1, g2, sets, bindings)
    except Exception:
        g1m, g2m, setsm = g1, g2, sets
    ok, observed, expected = verdict(g1m, g2m, setsm)
    return {
        "check": check,
        "g1": _graph_record(g1m),
        "g2": _graph_record(g2m),
        "sets": {name: vs.to_sorted_list() for name, vs in setsm.items()},
        "k": ks,
        "observed": observed,
        "expected": expected,
        "still_fails": not ok,
    }


# ---------------------------------------------------------------------------
# The auditors


def _audit_remark1(config: AuditConfig, rng: random.Random, tally: _Tally) -> None:
    """phi_def(k) over the product is at least the independence-based bound
    a1*a2 + min(n1-a1, n2-a2) for 1-d1-d2 <= k <= D1+D2."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs(), _has_edge):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for k in range(1 - g1.delta_min - g2.delta_min, g1.delta_max + g2.delta_max + 1):

            def verdict(a, b, sets, k=k):
                if k < 1 - a.delta_min - b.delta_min or k > a.delta_max + b.delta_max:
                    return True, None, None
                bound = vizing_alpha_bound(independence_number(a), independence_number(b))
                val = phi_value(_product(a, b), k, DEF)
                return val >= bound, val, bound

            bound = vizing_alpha_bound(independence_number(g1), independence_number(g2))
            val = phi_value(prod, k, DEF)
            checks += 1
            if val < bound:
                fails.append(_failure(verdict, g1, g2, {}, {}, {"k": k}, "phi_def >= alpha bound"))
        tally.add(checks, fails)


def _projection_transfer_audit(
    config: AuditConfig,
    rng: random.Random,
    tally: _Tally,
    kind: AllianceKind,
    claim_k: Callable[[int, Graph], int],
    check: str,
) -> None:
    """Shared driver for the one-projection transfer claims: if the i-th
    projection of S is free at k_i in its factor, S is free at claim_k in
    the product."""
    for _ in range(config.trials_per_theorem):
        g1, g2 = _draw_pair(rng, config, _max_deg_2)
        prod = _product(g1, g2)
        s = _draw_product_subset(rng, g1, g2)
        product_free = _FreeCache(prod)
        proj = projections(s, g1.n, g2.n)
        fails = []
        checks = 0
        for i, own, other in ((1, g1, g2), (2, g2, g1)):
            p = proj[i - 1]
            for ki in kind.canonical_k_range(own):
                if not is_free_set(own, p, ki, kind):
                    continue
                kc = claim_k(ki, other)

                def verdict(a, b, sets, i=i, ki=ki):
                    own2, other2 = (a, b) if i == 1 else (b, a)
                    p2 = projections(sets["s"], a.n, b.n)[i - 1]
                    if not is_free_set(own2, p2, ki, kind):
                        return True, None, None
                    got = is_free_set(_product(a, b), sets["s"], claim_k(ki, other2), kind)
                    return got, got, True

                checks += 1
                if not product_free(s, kc, kind):
                    fails.append(
                        _failure(
                            verdict,
                            g1,
                            g2,
                            {"s": s},
                            {"s": "product"},
                            {"k_i": ki, "axis": i, "k_claim": kc},
                            check,
                        )
                    )
        tally.add(checks, fails)


def _audit_th1_i(config, rng, tally):
    _projection_transfer_audit(
        config, rng, tally, DEF, lambda ki, other: ki + other.delta_max,
        "free projection at k makes S (k+D_other)-def-free in the product",
    )


def _audit_th1of(config, rng, tally):
    _projection_transfer_audit(
        config, rng, tally, OFF, lambda ki, other: ki - other.delta_min,
        "free projection at k makes S (k-d_other)-off-free in the product",
    )


def _audit_th1p_i(config, rng, tally):
    _projection_transfer_audit(
        config, rng, tally, POW, lambda ki, other: ki + other.delta_max,
        "free projection at k makes S (k+D_other)-pow-free in the product",
    )


def _both_projection_audit(
    config: AuditConfig,
    rng: random.Random,
    tally: _Tally,
    kind: AllianceKind,
    claim_k: Callable[[int, int, Graph, Graph], int | None],
    check: str,
) -> None:
    """Shared driver for the two-projection transfer claims."""
    for _ in range(config.trials_per_theorem):
        g1, g2 = _draw_pair(rng, config, _max_deg_2)
        prod = _product(g1, g2)
        s = _draw_product_subset(rng, g1, g2)
        product_free = _FreeCache(prod)
        p1, p2 = projections(s, g1.n, g2.n)
        free1 = {k1: is_free_set(g1, p1, k1, kind) for k1 in kind.canonical_k_range(g1)}
        free2 = {k2: is_free_set(g2, p2, k2, kind) for k2 in kind.canonical_k_range(g2)}
        fails = []
        checks = 0
        for k1, ok1 in free1.items():
            if not ok1:
                continue
            for k2, ok2 in free2.items():
                if not ok2:
                    continue
                kc = claim_k(k1, k2, g1, g2)
                if kc is None:
                    continue

                def verdict(a, b, sets, k1=k1, k2=k2):
                    q1, q2 = projections(sets["s"], a.n, b.n)
                    if not (is_free_set(a, q1, k1, kind) and is_free_set(b, q2, k2, kind)):
                        return True, None, None
                    kc2 = claim_k(k1, k2, a, b)
                    if kc2 is None:
                        return True, None, None
                    got = is_free_set(_product(a, b), sets["s"], kc2, kind)
                    return got, got, True

                checks += 1
                if not product_free(s, kc, kind):
                    fails.append(
                        _failure(
                            verdict, g1, g2, {"s": s}, {"s": "product"},
                            {"k1": k1, "k2": k2, "k_claim": kc}, check,
                        )
                    )
        tally.add(checks, fails)


def _audit_th1_ii(config, rng, tally):
    _both_projection_audit(
        config, rng, tally, DEF, lambda k1, k2, a, b: k1 + k2 - 1,
        "both projections free make S (k1+k2-1)-def-free in the product",
    )


def _audit_th1p_ii(config, rng, tally):
    def claim(k1, k2, a, b):
        kc = max(k1 + k2 - 1, min(k2 - a.delta_min, k1 - b.delta_min))
        if kc > a.delta_max + b.delta_max - 2:
            return None  # stated range is empty
        return kc

    _both_projection_audit(
        config, rng, tally, POW, claim,
        "both projections free make S k'-pow-free in the product",
    )


def _audit_cor_CoroTh1def_i(config, rng, tally):
    """phi_def(k) over the product >= n_j * phi_def(k-D_j) of a factor."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs()):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for own, other, axis in ((g1, g2, 1), (g2, g1, 2)):
            di, dj = own.delta_max, other.delta_max
            for k in range(dj - di, di + dj + 1):

                def verdict(a, b, sets, axis=axis, k=k):
                    own2, other2 = (a, b) if axis == 1 else (b, a)
                    lo = other2.delta_max - own2.delta_max
                    hi = own2.delta_max + other2.delta_max
                    if not lo <= k <= hi:
                        return True, None, None
                    lhs = phi_value(_product(a, b), k, DEF)
                    rhs = other2.n * phi_value(own2, k - other2.delta_max, DEF)
                    return lhs >= rhs, lhs, rhs

                lhs = phi_value(prod, k, DEF)
                rhs = other.n * phi_value(own, k - dj, DEF)
                checks += 1
                if lhs < rhs:
                    fails.append(
                        _failure(verdict, g1, g2, {}, {}, {"k": k, "axis": axis},
                                 "column bound for phi_def on the product")
                    )
        tally.add(checks, fails)


def _audit_cor_CoroTh1def_ii(config, rng, tally):
    """phi_def(k1+k2-1) over the product >= phi1*phi2 + min(n1-phi1, n2-phi2)."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs(), _has_edge):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for k1 in range(1 - g1.delta_min, g1.delta_max + 1):
            f1 = phi_value(g1, k1, DEF)
            for k2 in range(1 - g2.delta_min, g2.delta_max + 1):
                f2 = phi_value(g2, k2, DEF)
                rhs = f1 * f2 + min(g1.n - f1, g2.n - f2)
                lhs = phi_value(prod, k1 + k2 - 1, DEF)

                def verdict(a, b, sets, k1=k1, k2=k2):
                    if not (1 - a.delta_min <= k1 <= a.delta_max):
                        return True, None, None
                    if not (1 - b.delta_min <= k2 <= b.delta_max):
                        return True, None, None
                    p1 = phi_value(a, k1, DEF)
                    p2 = phi_value(b, k2, DEF)
                    r = p1 * p2 + min(a.n - p1, b.n - p2)
                    lh = phi_value(_product(a, b), k1 + k2 - 1, DEF)
                    return lh >= r, lh, r

                checks += 1
                if lhs < rhs:
                    fails.append(
                        _failure(verdict, g1, g2, {}, {}, {"k1": k1, "k2": k2},
                                 "box-plus-diagonal bound for phi_def on the product")
                    )
        tally.add(checks, fails)


def _is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.adj_bits[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full_mask


def _is_tree(g: Graph) -> bool:
    return g.edge_count == g.n - 1 and _is_connected(g)


def _triangle_free(g: Graph) -> bool:
    return all(g.adj_bits[u] & g.adj_bits[v] == 0 for u, v in g.edges())


def _audit_prop_remarktree(config, rng, tally):
    """phi_def(k) = n on trees (k >= 2), planar graphs (k >= 6), and planar
    triangle-free graphs (k >= 4), up to the maximum degree."""
    cases: list[tuple[Graph, str]] = []
    for n in range(3, 9):
        cases.append((path_graph(n), "tree"))
        cases.append((star_graph(n - 1), "tree"))
    cases.append((wheel_graph(7), "planar6"))
    cases.append((wheel_graph(8), "planar6"))
    cases.append((grid_graph(3, 3), "planar4_trianglefree"))
    cases.append((grid_graph(3, 4), "planar4_trianglefree"))
    cases = cases[: config.trials_per_theorem]
    while len(cases) < config.trials_per_theorem:
        cases.append((random_tree(rng.randint(3, 8), seed=rng.randrange(2**30)), "tree"))

    lows = {"tree": 2, "planar6": 6, "planar4_trianglefree": 4}

    def applicable(g: Graph, case: str, k: int) -> bool:
        if not lows[case] <= k <= g.delta_max:
            return False
        if case == "tree":
            return _is_tree(g)
        if case == "planar6":
            return bool(g.planar) and g.delta_max >= 6
        return bool(g.planar) and g.delta_max >= 4 and _triangle_free(g)

    for g, case in cases:
        fails = []
        checks = 0
        for k in range(lows[case], g.delta_max + 1):
            if not applicable(g, case, k):
                continue

            def verdict(a, b, sets, case=case, k=k):
                if not applicable(a, case, k):
                    return True, None, None
                val = phi_value(a, k, DEF)
                return val == a.n, val, a.n

            val = phi_value(g, k, DEF)
            checks += 1
            if val != g.n:
                fails.append(
                    _failure(verdict, g, None, {}, {}, {"k": k, "case": case},
                             "phi_def equals the order")
                )
        tally.add(checks, fails)


def _audit_th_factor_recovery(config, rng, tally):
    """If S1 x S2 is def k-free in the product and S2 is a defensive
    k'-alliance in G2, then S1 is def (k-k')-free in G1."""
    for _ in range(config.trials_per_theorem):
        g1, g2 = _draw_pair(rng, config, _has_edge)
        prod = _product(g1, g2)
        s1 = _draw_subset(rng, g1.n)
        s2 = _draw_subset(rng, g2.n)
        if s2.mask == 0:
            s2 = VertexSet(1 << rng.randrange(g2.n), g2.n)
        box = factor_box(s1, s2)
        product_free = _FreeCache(prod)
        alliance_ks = [
            kp for kp in DEF.canonical_k_range(g2) if is_defensive_alliance(g2, s2, kp)
        ]
        fails = []
        checks = 0
        if alliance_ks:
            for k in DEF.canonical_k_range(prod):
                if not product_free(box, k, DEF):
                    continue
                for kp in alliance_ks:

                    def verdict(a, b, sets, k=k, kp=kp):
                        bx = factor_box(sets["s1"], sets["s2"])
                        if sets["s2"].mask == 0:
                            return True, None, None
                        if not is_free_set(_product(a, b), bx, k, DEF):
                            return True, None, None
                        if not is_defensive_alliance(b, sets["s2"], kp):
                            return True, None, None
                        got = is_free_set(a, sets["s1"], k - kp, DEF)
                        return got, got, True

                    got = is_free_set(g1, s1, k - kp, DEF)
                    checks += 1
                    if not got:
                        fails.append(
                            _failure(verdict, g1, g2, {"s1": s1, "s2": s2},
                                     {"s1": "g1", "s2": "g2"}, {"k": k, "k_prime": kp},
                                     "factor recovery of a def-free set")
                        )
        tally.add(checks, fails)


def _audit_cor_otrocoro(config, rng, tally):
    """If S1 x V2 is def k-free in the product, S1 is def (k-d2)-free."""
    for _ in range(config.trials_per_theorem):
        g1, g2 = _draw_pair(rng, config, _has_edge)
        prod = _product(g1, g2)
        s1 = _draw_subset(rng, g1.n)
        column = factor_box(s1, g2.vertices)
        product_free = _FreeCache(prod)
        fails = []
        checks = 0
        for k in DEF.canonical_k_range(prod):
            if not product_free(column, k, DEF):
                continue

            def verdict(a, b, sets, k=k):
                col = factor_box(sets["s1"], b.vertices)
                if not is_free_set(_product(a, b), col, k, DEF):
                    return True, None, None
                got = is_free_set(a, sets["s1"], k - b.delta_min, DEF)
                return got, got, True

            got = is_free_set(g1, s1, k - g2.delta_min, DEF)
            checks += 1
            if not got:
                fails.append(
                    _failure(verdict, g1, g2, {"s1": s1}, {"s1": "g1"}, {"k": k},
                             "column recovery of a def-free set")
                )
        tally.add(checks, fails)


_REGULAR_POOL = ("complete:2", "cycle:3", "complete:3", "cycle:4", "complete:4")


def _audit_prop_iff_regular(config, rng, tally):
    """For regular G2: S1 x V2 def k-free in the product iff S1 def
    (k-d2)-free in G1, for d2-D1 <= k <= D1+d2."""
    for _ in range(config.trials_per_theorem):
        spec = rng.choice(_REGULAR_POOL)
        kind_name, order = spec.split(":")
        g2 = complete_graph(int(order)) if kind_name == "complete" else cycle_graph(int(order))
        cap = max(2, config.max_product_order // g2.n)
        g1 = _draw_graph(rng, min(config.max_factor_order, cap))
        s1 = _draw_subset(rng, g1.n)
        prod = _product(g1, g2)
        product_free = _FreeCache(prod)
        d2 = g2.delta_min
        fails = []
        checks = 0
        for k in range(d2 - g1.delta_max, g1.delta_max + d2 + 1):

            def verdict(a, b, sets, k=k):
                if not b.is_regular:
                    return True, None, None
                if not b.delta_min - a.delta_max <= k <= a.delta_max + b.delta_min:
                    return True, None, None
                col = factor_box(sets["s1"], b.vertices)
                left = is_free_set(_product(a, b), col, k, DEF)
                right = is_free_set(a, sets["s1"], k - b.delta_min, DEF)
                return left == right, [left, right], "equal"

            left = product_free(factor_box(s1, g2.vertices), k, DEF)
            right = is_free_set(g1, s1, k - d2, DEF)
            checks += 1
            if left != right:
                fails.append(
                    _failure(verdict, g1, g2, {"s1": s1}, {"s1": "g1"}, {"k": k},
                             "column freeness iff factor freeness (regular G2)")
                )
        tally.add(checks, fails)


def _audit_cor_coronofensive(config, rng, tally):
    """phi_off(k) over the product >= n_j * phi_off(k+d_j) of a factor."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs(), _has_edge):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for own, other, axis in ((g1, g2, 1), (g2, g1, 2)):
            for k in range(2 - other.delta_min - own.delta_max, own.delta_max - other.delta_min + 1):

                def verdict(a, b, sets, axis=axis, k=k):
                    own2, other2 = (a, b) if axis == 1 else (b, a)
                    lo = 2 - other2.delta_min - own2.delta_max
                    hi = own2.delta_max - other2.delta_min
                    if not lo <= k <= hi:
                        return True, None, None
                    lhs = phi_value(_product(a, b), k, OFF)
                    rhs = other2.n * phi_value(own2, k + other2.delta_min, OFF)
                    return lhs >= rhs, lhs, rhs

                lhs = phi_value(prod, k, OFF)
                rhs = other.n * phi_value(own, k + other.delta_min, OFF)
                checks += 1
                if lhs < rhs:
                    fails.append(
                        _failure(verdict, g1, g2, {}, {}, {"k": k, "axis": axis},
                                 "column bound for phi_off on the product")
                    )
        tally.add(checks, fails)


def _union_k(k1: int, k2: int, g1: Graph, g2: Graph) -> int:
    return max(
        k1 - g2.delta_min,
        k2 - g1.delta_min,
        min(k2 + g1.delta_max, k1 + g2.delta_max),
    )


def _audit_th_union(config, rng, tally):
    """If S_i is off k_i-free in G_i, (S1 x V2) u (V1 x S2) is off k'-free
    in the product for k' = max(k1-d2, k2-d1, min(k2+D1, k1+D2))."""
    for _ in range(config.trials_per_theorem):
        g1, g2 = _draw_pair(rng, config, _max_deg_2)
        prod = _product(g1, g2)
        s1 = _draw_small_subset(rng, g1.n)
        s2 = _draw_small_subset(rng, g2.n)
        union = VertexSet(
            factor_box(s1, g2.vertices).mask | factor_box(g1.vertices, s2).mask, prod.n
        )
        product_free = _FreeCache(prod)
        free1 = {k1: is_free_set(g1, s1, k1, OFF) for k1 in OFF.canonical_k_range(g1)}
        free2 = {k2: is_free_set(g2, s2, k2, OFF) for k2 in OFF.canonical_k_range(g2)}
        fails = []
        checks = 0
        for k1, ok1 in free1.items():
            if not ok1:
                continue
            for k2, ok2 in free2.items():
                if not ok2:
                    continue
                kc = _union_k(k1, k2, g1, g2)

                def verdict(a, b, sets, k1=k1, k2=k2):
                    if not (is_free_set(a, sets["s1"], k1, OFF) and is_free_set(b, sets["s2"], k2, OFF)):
                        return True, None, None
                    u = VertexSet(
                        factor_box(sets["s1"], b.vertices).mask
                        | factor_box(a.vertices, sets["s2"]).mask,
                        a.n * b.n,
                    )
                    got = is_free_set(_product(a, b), u, _union_k(k1, k2, a, b), OFF)
                    return got, got, True

                checks += 1
                if not product_free(union, kc, OFF):
                    fails.append(
                        _failure(verdict, g1, g2, {"s1": s1, "s2": s2},
                                 {"s1": "g1", "s2": "g2"},
                                 {"k1": k1, "k2": k2, "k_claim": kc},
                                 "union of columns is off k'-free")
                    )
        tally.add(checks, fails)


def _audit_cor_union(config, rng, tally):
    """phi_off(k) over the product >= n1*phi2 + n2*phi1 - phi1*phi2 for
    every k from k' up to D1+D2."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs(), _has_edge):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for k1 in OFF.canonical_k_range(g1):
            f1 = phi_value(g1, k1, OFF)
            for k2 in OFF.canonical_k_range(g2):
                f2 = phi_value(g2, k2, OFF)
                rhs = g1.n * f2 + g2.n * f1 - f1 * f2
                for k in range(_union_k(k1, k2, g1, g2), g1.delta_max + g2.delta_max + 1):

                    def verdict(a, b, sets, k1=k1, k2=k2, k=k):
                        if k1 not in OFF.canonical_k_range(a) or k2 not in OFF.canonical_k_range(b):
                            return True, None, None
                        if not _union_k(k1, k2, a, b) <= k <= a.delta_max + b.delta_max:
                            return True, None, None
                        p1 = phi_value(a, k1, OFF)
                        p2 = phi_value(b, k2, OFF)
                        r = a.n * p2 + b.n * p1 - p1 * p2
                        lh = phi_value(_product(a, b), k, OFF)
                        return lh >= r, lh, r

                    lhs = phi_value(prod, k, OFF)
                    checks += 1
                    if lhs < rhs:
                        fails.append(
                            _failure(verdict, g1, g2, {}, {}, {"k1": k1, "k2": k2, "k": k},
                                     "union bound for phi_off on the product")
                        )
        tally.add(checks, fails)


def _audit_phi_p_lower(config, rng, tally):
    """phi_pow(k) >= max(phi_def(k), phi_off(k+2)) on any graph."""
    top = min(9, config.max_product_order)
    for _ in range(config.trials_per_theorem):
        g = _draw_graph(rng, top, _has_edge)
        fails = []
        checks = 0
        for k in POW.canonical_k_range(g):

            def verdict(a, b, sets, k=k):
                if k not in POW.canonical_k_range(a):
                    return True, None, None
                lhs = phi_value(a, k, POW)
                rhs = max(phi_value(a, k, DEF), phi_value(a, k + 2, OFF))
                return lhs >= rhs, lhs, rhs

            lhs = phi_value(g, k, POW)
            rhs = max(phi_value(g, k, DEF), phi_value(g, k + 2, OFF))
            checks += 1
            if lhs < rhs:
                fails.append(
                    _failure(verdict, g, None, {}, {}, {"k": k},
                             "phi_pow dominates phi_def and shifted phi_off")
                )
        tally.add(checks, fails)


def _audit_cor_coroproductpowerful_i(config, rng, tally):
    """phi_pow(k) over the product >= n_j * phi_pow(k-D_j) of a factor."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs(), _degree_sum_3):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for own, other, axis in ((g1, g2, 1), (g2, g1, 2)):
            di, dj = own.delta_max, other.delta_max
            lo = max(dj - di, dj + 1 - own.delta_min)
            for k in range(lo, di + dj - 1):

                def verdict(a, b, sets, axis=axis, k=k):
                    own2, other2 = (a, b) if axis == 1 else (b, a)
                    lo2 = max(
                        other2.delta_max - own2.delta_max,
                        other2.delta_max + 1 - own2.delta_min,
                    )
                    if not lo2 <= k <= own2.delta_max + other2.delta_max - 2:
                        return True, None, None
                    lhs = phi_value(_product(a, b), k, POW)
                    rhs = other2.n * phi_value(own2, k - other2.delta_max, POW)
                    return lhs >= rhs, lhs, rhs

                lhs = phi_value(prod, k, POW)
                rhs = other.n * phi_value(own, k - dj, POW)
                checks += 1
                if lhs < rhs:
                    fails.append(
                        _failure(verdict, g1, g2, {}, {}, {"k": k, "axis": axis},
                                 "column bound for phi_pow on the product")
                    )
        tally.add(checks, fails)


def _audit_cor_coroproductpowerful_ii(config, rng, tally):
    """phi_pow(k) over the product >= phi1*phi2 + min(n1-phi1, n2-phi2) for
    k from k1+k2-1 up to D1+D2-2, with k_i >= 1-d_i."""
    for g1, g2 in _pair_instances(rng, config, _scripted_pairs(), _degree_sum_3):
        prod = _product(g1, g2)
        fails = []
        checks = 0
        for k1 in range(1 - g1.delta_min, g1.delta_max - 1):
            f1 = phi_value(g1, k1, POW)
            for k2 in range(1 - g2.delta_min, g2.delta_max - 1):
                f2 = phi_value(g2, k2, POW)
                rhs = f1 * f2 + min(g1.n - f1, g2.n - f2)
                for k in range(k1 + k2 - 1, g1.delta_max + g2.delta_max - 1):

                    def verdict(a, b, sets, k1=k1, k2=k2, k=k):
                        if not (1 - a.delta_min <= k1 <= a.delta_max - 2):
                            return True, None, None
                        if not (1 - b.delta_min <= k2 <= b.delta_max - 2):
                            return True, None, None
                        if not k1 + k2 - 1 <= k <= a.delta_max + b.delta_max - 2:
                            return True, None, None
                        p1 = phi_value(a, k1, POW)
                        p2 = phi_value(b, k2, POW)
                        r = p1 * p2 + min(a.n - p1, b.n - p2)
                        lh = phi_value(_product(a, b), k, POW)
                        return lh >= r, lh, r

                    lhs = phi_value(prod, k, POW)
                    checks += 1
                    if lhs < rhs:
                        fails.append(
                            _failure(verdict, g1, g2, {}, {}, {"k1": k1, "k2": k2, "k": k},
                                     "box-plus-diagonal bound for phi_pow on the product")
                        )
        tally.add(checks, fails)


def _audit_vizing_alpha(config, rng, tally):
    """alpha(product) >= alpha1*alpha2 + min(n1-alpha1, n2-alpha2)."""
    cap = min(20, config.max_product_order)
    for _ in range(config.trials_per_theorem):
        g1, g2 = _draw_pair(rng, config)
        while g1.n * g2.n > cap:
            g1, g2 = _draw_pair(rng, config)

        def verdict(a, b, sets):
            bound = vizing_alpha_bound(independence_number(a), independence_number(b))
            val = independence_number(_product(a, b)).independence
            return val >= bound, val, bound

        ok, val, bound = verdict(g1, g2, {})
        fails = []
        if not ok:
            fails.append(
                _failure(verdict, g1, g2, {}, {}, {}, "independence bound on the product")
            )
        tally.add(1, fails)


_AUDITS: dict[str, Callable[[AuditConfig, random.Random, _Tally], None]] = {
    "remark1": _audit_remark1,
    "th1_i": _audit_th1_i,
    "th1_ii": _audit_th1_ii,
    "cor_CoroTh1def_i": _audit_cor_CoroTh1def_i,
    "cor_CoroTh1def_ii": _audit_cor_CoroTh1def_ii,
    "prop_remarktree": _audit_prop_remarktree,
    "th_factor_recovery": _audit_th_factor_recovery,
    "cor_otrocoro": _audit_cor_otrocoro,
    "prop_iff_regular": _audit_prop_iff_regular,
    "th1of": _audit_th1of,
    "cor_coronofensive": _audit_cor_coronofensive,
    "th_union": _audit_th_union,
    "cor_union": _audit_cor_union,
    "phi_p_lower": _audit_phi_p_lower,
    "th1p_i": _audit_th1p_i,
    "th1p_ii": _audit_th1p_ii,
    "cor_coroproductpowerful_i": _audit_cor_coroproductpowerful_i,
    "cor_coroproductpowerful_ii": _audit_cor_coroproductpowerful_ii,
    "vizing_alpha": _audit_vizing_alpha,
}

assert set(_AUDITS) == set(THEOREM_IDS)


def audit(theorem_id: str, config: AuditConfig | None = None) -> AuditReport:
    """Run one auditor; deterministic for a fixed configuration."""
    if theorem_id not in _AUDITS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; choose from {THEOREM_IDS}")
    config = config or AuditConfig()
    rng = random.Random(f"{config.seed}/{theorem_id}")
    tally = _Tally()
    if config.trials_per_theorem > 0:
        _AUDITS[theorem_id](config, rng, tally)
    return AuditReport(
        theorem_id=theorem_id,
        trials=tally.trials,
        passes=tally.passes,
        failures=tally.failures,
        skipped=tally.skipped,
        checks=tally.checks,
        config=config,
    )


def audit_all(config: AuditConfig | None = None) -> list[AuditReport]:
    config = config or AuditConfig()
    return [audit(tid, config) for tid in THEOREM_IDS]


# ---------------------------------------------------------------------------
# Strict-gap search: graphs where phi_pow(2) beats both easy lower bounds


@dataclass(frozen=True)
class StrictGapInstance:
    graph: Graph
    k: int
    phi_powerful: int
    phi_defensive: int
    phi_offensive: int

    def to_record(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "k": self.k,
            "phi_powerful": self.phi_powerful,
            "phi_defensive": self.phi_defensive,
            "phi_offensive": self.phi_offensive,
        }


def find_strict_gap_instance(
    seed: int = 987620, k: int = 2, max_order: int = 9, attempts: int = 4000
) -> StrictGapInstance | None:
    """Seeded search for a graph with phi_pow(k) strictly above
    max(phi_def(k), phi_off(k+2)); the two lower bounds are not tight."""
    rng = random.Random(f"{seed}/strict-gap/{k}")
    for _ in range(attempts):
        n = rng.randint(6, max_order)
        g = _er(rng, n, rng.choice((0.4, 0.5, 0.6, 0.7)))
        if g.delta_max < k:
            continue
        pp = phi_value(g, k, POW)
        pd = phi_value(g, k, DEF)
        po = phi_value(g, k + 2, OFF)
        if pp > max(pd, po):
            return StrictGapInstance(g, k, pp, pd, po)
    return None
