"""The graph associated to a numerical semigroup, and its provable structure.

G(S) has the nonzero Apery elements as potential vertices, an edge {x, y}
(x = y allowed) whenever x + y is again a nonzero Apery element, and keeps
only vertices meeting an edge. Edge weights x + y map onto the decomposable
Apery elements; depths classify edges as weak (depth sum q - 1) or normal.
Every inequality and structural statement provable for such graphs is exposed
here as a checkable predicate: they hold for every semigroup, so any False is
a bug detector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matching
from .apery import AperyAnalysis, analyze as apery_analyze, apery_set, \
    check_addition_rule, summand_closure_check, wilf_w
from .errors import InconsistentDepths
from .loopy import LoopyGraph
from .semigroup import NumericalSemigroup


def build_graph(S: NumericalSemigroup,
                apery: AperyAnalysis | None = None) -> LoopyGraph:
    """G(S): edges are pairs of nonzero Apery elements summing into the set."""
    x = apery.apery_x if apery is not None else apery_set(S)
    xset = set(x)
    edges = []
    loops = []
    for i, a in enumerate(x):
        if 2 * a in xset:
            loops.append(a)
        for b in x[i + 1:]:
            if a + b in xset:
                edges.append((a, b))
    touched = {v for e in edges for v in e} | set(loops)
    return LoopyGraph(touched, edges, loops)


def classify_edges(G: LoopyGraph, apery: AperyAnalysis
                   ) -> tuple[frozenset, frozenset]:
    """Split E into weak (depth sum q - 1) and normal (depth sum >= q) edges.

    Raises InconsistentDepths if any edge has depth sum below q - min(rho, 1),
    which no associated graph can exhibit.
    """
    q, rho, depth_of = apery.depth_q, apery.rho, apery.depth_of
    floor = q - min(rho, 1)
    weak = set()
    normal = set()
    for a, b in G.all_edges():
        s = depth_of[a] + depth_of[b]
        if s < floor:
            raise InconsistentDepths(
                f"edge ({a}, {b}) has depth sum {s} < {floor}")
        (weak if s == q - 1 else normal).add((a, b))
    return frozenset(weak), frozenset(normal)


@dataclass(frozen=True)
class WeightAnalysis:
    """Edge-weight map of G(S), its fibers, and the deficit set X0."""

    weight_of: dict[tuple, int]
    fibers: dict[int, frozenset]
    x0_set: frozenset


def weight_analysis(S: NumericalSemigroup, G: LoopyGraph,
                    apery: AperyAnalysis) -> WeightAnalysis:
    """Weights wt({x, y}) = x + y with fibers over the decomposable Apery set.

    X0 collects targets z reachable with depth deficit, i.e. members of some
    decomposition x + y = z with depth(x) + depth(y) = depth(z) + q - 1.
    """
    weight_of = {}
    fibers: dict[int, set] = {}
    x0 = set()
    q, depth_of = apery.depth_q, apery.depth_of
    for a, b in G.all_edges():
        z = a + b
        weight_of[(a, b)] = z
        fibers.setdefault(z, set()).add((a, b))
        if depth_of[a] + depth_of[b] == depth_of[z] + q - 1:
            x0.add(z)
    assert set(fibers) == set(apery.x_decomposable)   # wt is onto X n D
    assert len(x0) <= apery.rho
    weak, _ = classify_edges(G, apery)
    assert apery.rho >= len({weight_of[e] for e in weak})
    return WeightAnalysis(weight_of,
                          {z: frozenset(es) for z, es in fibers.items()},
                          frozenset(x0))


def tau_lower_bound(q: int, nu: int, n: int, k: int) -> Fraction:
    """Matching-side lower bound on tau(X): (k(q-1) + nu)/2 + (n - k)."""
    return Fraction(k * (q - 1) + nu, 2) + (n - k)


def tau_bound_holds(tau_x: int, q: int, nu: int, n: int, k: int) -> bool:
    """Exact integer comparison of tau(X) against the lower bound."""
    return 2 * tau_x >= k * (q - 1) + nu + 2 * (n - k)


# -- structural lemmas -------------------------------------------------------
#
# "v is a proper factor of u" is additive throughout: u - v lies in S*.


def _proper_factors(S: NumericalSemigroup, u: int) -> list[int]:
    m = S.multiplicity
    return [v for v in range(m, u - m + 1)
            if S.is_member(v) and S.is_member(u - v)]


def _lengths(S: NumericalSemigroup, top: int) -> dict[int, int]:
    """len(z) for every member in [m, top]: the largest t with z a sum of t
    elements of S*."""
    m = S.multiplicity
    out: dict[int, int] = {}
    for z in S.members_below(top + 1):
        if z < m:
            continue
        best = 1
        for a in range(m, z // 2 + 1):
            if S.is_member(a) and S.is_member(z - a):
                split = out[a] + out[z - a]
                if split > best:
                    best = split
        out[z] = best
    return out


def structural_lemma_suite(S: NumericalSemigroup,
                           G: LoopyGraph | None = None,
                           apery: AperyAnalysis | None = None
                           ) -> dict[str, bool]:
    """Instantiate every provable vertex/degree/factor statement on G(S).

    All entries are True for every numerical semigroup; a False exposes an
    implementation bug, not a mathematical discovery.
    """
    apery = apery or apery_analyze(S)
    G = G if G is not None else build_graph(S, apery)
    x = apery.apery_x
    xset = set(x)
    xd = apery.x_decomposable
    v_all = set(G.vertices)
    prim = set(S.min_generators)
    v_p = v_all & prim
    v_d = v_all - v_p
    factors_of = {u: _proper_factors(S, u) for u in sorted(xset | v_all)}

    checks: dict[str, bool] = {}

    checks["x_is_downset"] = all(v in xset
                                 for z in x for v in factors_of[z])

    proper_factor_pool = {v for z in xd for v in factors_of[z]}
    checks["v_is_downset"] = all(v in v_all
                                 for u in v_all for v in factors_of[u])
    checks["v_equals_factors_of_xd"] = v_all == proper_factor_pool

    checks["neighborhoods_are_downsets"] = all(
        w in G.neighbors(u)
        for u in v_all for y in G.neighbors(u) for w in factors_of[y])

    checks["p_exceeds_v_cap_p"] = len(prim) >= len(v_p) + 1

    checks["factor_degrees_decrease"] = all(
        G.degree(v) > G.degree(u)
        for u in v_all for v in factors_of[u] if v in v_all)

    if v_all:
        top = max(G.degree(v) for v in v_all)
        checks["max_degree_primitive"] = all(
            v in v_p for v in v_all if G.degree(v) == top)
    else:
        checks["max_degree_primitive"] = True

    checks["equal_degree_antichain"] = all(
        G.degree(v) != G.degree(u)
        for u in v_all for v in factors_of[u] if v in v_all)

    if v_d:
        lengths = _lengths(S, max(v_d))
        longest = max(lengths[u] for u in v_d)
        checks["max_length_nonloopy"] = all(
            u not in G.loops for u in v_d if lengths[u] == longest)
    else:
        checks["max_length_nonloopy"] = True

    checks["all_loopy_forces_v_primitive"] = (
        not v_all or set(G.loops) != v_all or not v_d)

    # a nonloopy vertex never properly divides a neighbor (z - y in S* fails)
    checks["nonloopy_divides_no_neighbor"] = all(
        not S.is_member(z - y)
        for y in v_all if y not in G.loops
        for z in G.neighbors(y))

    checks["factor_of_loopy_is_loopy"] = all(
        v in G.loops
        for u in G.loops for v in factors_of[u] if v in v_all)

    checks["unique_loopy_is_primitive"] = (
        G.loop_count != 1 or next(iter(G.loops)) in prim)

    ok = all(len(v_d) >= G.degree(u) for u in v_d)
    if len(v_d) == 1:
        u = next(iter(v_d))
        nbrs = G.neighbors(u)
        ok = ok and len(nbrs) == 1
        if ok:
            w = next(iter(nbrs))
            ok = w in v_p and u == 2 * w
    checks["v_cap_d_degree_bound"] = ok

    e_total = G.edge_count
    checks["large_difference_bound"] = all(
        len(xd) <= e_total - G.degree(u)
        for u in v_d if not any(2 * p == u for p in prim))

    if len(xd) == e_total:
        leaf_ok = True
        for a, b in G.all_edges():
            if a in v_p and b in v_p:
                continue
            pair = sorted((a, b))
            if not (pair[0] in v_p and pair[1] == 2 * pair[0]
                    and G.neighbors(pair[1]) == {pair[0]}):
                leaf_ok = False
        checks["leaf_structure"] = leaf_ok
    else:
        checks["leaf_structure"] = True

    return checks


# -- combined per-semigroup verification -------------------------------------


def invariant_report(S: NumericalSemigroup) -> dict[str, bool]:
    """Every depth, weight, matching and structural invariant on one semigroup."""
    ap = apery_analyze(S)
    m, c, q, rho = S.multiplicity, S.conductor, ap.depth_q, ap.rho
    prim = set(S.min_generators)
    checks: dict[str, bool] = {}

    checks["L_equals_q_plus_tau"] = len(S.small_elements()) == q + ap.tau_x
    checks["m_equals_p_plus_xd"] = m == len(prim) + len(ap.x_decomposable)
    checks["wilf_formulas_agree"] = ap.wilf_w == wilf_w(S)
    checks["apery_one_per_class"] = (
        len(ap.apery_x) == m - 1
        and len({v % m for v in ap.apery_x}) == m - 1)
    checks["apery_max"] = (not ap.apery_x
                           or max(ap.apery_x) == c + m - 1)
    checks["apery_depths_nonnegative"] = all(
        ap.depth_of[v] >= 0 for v in ap.apery_x)

    window = S.members_below(c + 2 * m)
    delta = {v: -((v - c) // m) for v in window}
    checks["depth_window"] = all(
        c <= v + delta[v] * m < c + m for v in window)
    checks["layer_characterizations_agree"] = all(
        q - delta[v] == (v + rho) // m for v in window)
    lo = q - min(rho, 1)
    checks["depth_sum_inequality"] = all(
        delta[a] + delta[b] - (-((a + b - c) // m)) in range(lo, q + 2)
        for i, a in enumerate(window) for b in window[i:])
    checks["addition_rule"] = all(
        check_addition_rule(S, i, j)
        for j in range(1, q + 2) for i in range(j + 1))
    checks["summand_closure"] = summand_closure_check(S)

    G = build_graph(S, ap)
    weak, normal = classify_edges(G, ap)
    wa = weight_analysis(S, G, ap)
    ma = matching.analyze(G, weak)
    n, k, nu = G.n, ma.vm, ma.nu

    checks["xd_at_most_edges"] = len(ap.x_decomposable) <= G.edge_count
    checks["fiber_identity"] = len(ap.x_decomposable) == G.edge_count - sum(
        len(f) - 1 for f in wa.fibers.values())
    edge_list = G.all_edges()
    checks["adjacent_weights_distinct"] = all(
        len({wa.weight_of[e] for e in edge_list if v in e})
        == sum(1 for e in edge_list if v in e)
        for v in G.vertices)
    checks["x0_at_most_rho"] = len(wa.x0_set) <= rho
    checks["rho_bounds_weak_weights"] = rho >= len(
        {wa.weight_of[e] for e in weak})
    checks["rho_zero_forces_normal"] = rho != 0 or not weak
    checks["weak_targets_depth_zero"] = all(
        ap.depth_of[wa.weight_of[e]] == 0 for e in weak)

    checks["lambda_le_vm_le_n"] = ma.loop_count <= k <= n
    checks["nu_in_range"] = 0 <= nu <= k
    checks["tau_lower_bound"] = tau_bound_holds(ap.tau_x, q, nu, n, k)
    checks["tau_small_forces_k_le_4"] = (
        not (ap.tau_x <= 2 * q - 1 and q >= 4) or k <= 4)
    checks["med_iff_empty_graph"] = (len(prim) == m) == (n == 0)

    checks.update(structural_lemma_suite(S, G, ap))
    return checks
