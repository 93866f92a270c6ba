"""Exhaustive enumeration of numerical semigroups by genus.

The semigroup tree is rooted at the full set of nonnegative integers; the
children of S are S minus one minimal generator exceeding the Frobenius
number, which raises the genus by exactly one and reaches every semigroup
exactly once. Nodes carry a membership bitmask plus a decomposition-count
array, so generators and Frobenius data update incrementally instead of
re-sieving.

The walk powers the per-genus counts, the graph-equivalence class counts
(canonical keys of the associated graphs), and the Wilf verification with
its known-case buckets.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import get_context

from .errors import WilfCounterexample
from .loopy import _canonical_key
from .semigroup import NumericalSemigroup

GENUS_HARD_CAP = 30
_FRONTIER_GENUS = 8

# node = (mask, d, m, f, g): membership bitmask over [0, window),
# decomposition counts d[y] = #{a <= b in S* with a + b = y}, multiplicity,
# Frobenius number, genus.


def _window(g_max: int) -> int:
    # generators and decomposition targets stay below c + m <= 3g + 1
    return 3 * g_max + 4


def _root(window: int):
    mask = (1 << window) - 1
    d = bytes(y // 2 for y in range(window))
    return (mask, d, 1, -1, 0)


def _child_generators(node, window):
    mask, d, m, f, g = node
    c = f + 1
    lo = max(c, m)
    hi = min(max(c + m, m + 1), window)
    return [p for p in range(lo, hi) if d[p] == 0]


def _remove_generator(node, p, window):
    mask, d, m, f, g = node
    child_d = bytearray(d)
    limit = window - p
    for s in range(m, limit):
        if mask >> s & 1 and s != p:
            child_d[p + s] -= 1
    if 2 * p < window:
        child_d[2 * p] -= 1
    child_m = m + 1 if p == m else m
    return (mask & ~(1 << p), bytes(child_d), child_m, p, g + 1)


def _node_semigroup(node) -> NumericalSemigroup:
    mask, d, m, f, g = node
    c = f + 1
    table = bytes((mask >> x) & 1 for x in range(c + m))
    gens = _node_generators(node)
    return NumericalSemigroup(table, m, f, c, g, gens)


def _node_generators(node):
    mask, d, m, f, g = node
    hi = max(f + 1 + m, m + 1)
    return tuple(p for p in range(m, hi) if mask >> p & 1 and d[p] == 0)


def iter_semigroups(g_max: int, genus: int | None = None):
    """Depth-first stream of every semigroup of genus <= g_max (or == genus).

    Deterministic order: children are visited by increasing removed generator.
    """
    if g_max < 0:
        return
    window = _window(g_max)
    stack = [_root(window)]
    while stack:
        node = stack.pop()
        if genus is None or node[4] == genus:
            yield _node_semigroup(node)
        if node[4] < g_max:
            for p in reversed(_child_generators(node, window)):
                stack.append(_remove_generator(node, p, window))


@dataclass
class GenusCensus:
    """Aggregated per-genus census data."""

    genus: int
    count_ng: int = 0
    class_keys: Counter = field(default_factory=Counter)
    class_representatives: dict = field(default_factory=dict)
    wilf_violations: list = field(default_factory=list)
    bucket_p_ge_third_m: int = 0        # semigroups with 3|P| >= m
    bucket_p_le_3: int = 0
    bucket_q_le_3: int = 0
    bucket_p_ge_half_m: int = 0
    bucket_covered: int = 0         # in at least one known-case bucket

    @property
    def class_count_gamma(self) -> int:
        return len(self.class_keys)

    @property
    def p_ge_third_fraction(self) -> Fraction:
        if self.count_ng == 0:
            return Fraction(0)
        return Fraction(self.bucket_p_ge_third_m, self.count_ng)

    def merge(self, other: "GenusCensus") -> None:
        self.count_ng += other.count_ng
        self.class_keys += other.class_keys
        for key, rep in other.class_representatives.items():
            mine = self.class_representatives.get(key)
            self.class_representatives[key] = rep if mine is None else min(mine, rep)
        self.wilf_violations += other.wilf_violations
        self.bucket_p_ge_third_m += other.bucket_p_ge_third_m
        self.bucket_p_le_3 += other.bucket_p_le_3
        self.bucket_q_le_3 += other.bucket_q_le_3
        self.bucket_p_ge_half_m += other.bucket_p_ge_half_m
        self.bucket_covered += other.bucket_covered


def _graph_key(mask, m, c, cache):
    xs = [x for x in range(m + 1, c + m)
          if mask >> x & 1 and not mask >> (x - m) & 1]
    xset = set(xs)
    adj: dict[int, int] = {}
    loops = []
    for i, a in enumerate(xs):
        if 2 * a in xset:
            loops.append(a)
            adj.setdefault(a, 0)
        for b in xs[i + 1:]:
            if a + b in xset:
                adj[a] = adj.get(a, 0)
                adj[b] = adj.get(b, 0)
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    verts = sorted(adj)
    pos = {v: i for i, v in enumerate(verts)}
    masks = tuple(
        sum(1 << pos[w] for w in verts if adj[v] >> w & 1) for v in verts)
    loopmask = sum(1 << pos[v] for v in loops)
    sig = (len(verts), masks, loopmask)
    key = cache.get(sig)
    if key is None:
        key = _canonical_key(*sig)
        cache[sig] = key
    return key


def _tally(node, acc: dict[int, GenusCensus], classes: bool, cache) -> None:
    mask, d, m, f, g = node
    c = f + 1
    stats = acc[g]
    stats.count_ng += 1
    gens = _node_generators(node)
    n_p = len(gens)
    n_l = (mask & ((1 << c) - 1)).bit_count() if c > 0 else 0
    if n_p * n_l < c:
        stats.wilf_violations.append(gens)
    covered = False
    if 3 * n_p >= m:
        stats.bucket_p_ge_third_m += 1
        covered = True
    if n_p <= 3:
        stats.bucket_p_le_3 += 1
        covered = True
    if c <= 3 * m:
        stats.bucket_q_le_3 += 1
        covered = True
    if 2 * n_p >= m:
        stats.bucket_p_ge_half_m += 1
        covered = True
    if covered:
        stats.bucket_covered += 1
    if classes:
        key = _graph_key(mask, m, c, cache)
        stats.class_keys[key] += 1
        rep = stats.class_representatives.get(key)
        if rep is None or gens < rep:
            stats.class_representatives[key] = gens


def _walk(node, g_max, window, acc, classes, cache):
    stack = [node]
    while stack:
        cur = stack.pop()
        _tally(cur, acc, classes, cache)
        if cur[4] < g_max:
            for p in reversed(_child_generators(cur, window)):
                stack.append(_remove_generator(cur, p, window))


def _subtree_job(args):
    node, g_max, window, classes = args
    acc = {g: GenusCensus(g) for g in range(node[4], g_max + 1)}
    _walk(node, g_max, window, acc, classes, {})
    return acc


def run_census(g_max: int, workers: int = 1, classes: bool = False
               ) -> dict[int, GenusCensus]:
    """Census of every genus 0..g_max; deterministic for any worker count."""
    if not 0 <= g_max <= GENUS_HARD_CAP:
        raise ValueError(f"genus bound must be within 0..{GENUS_HARD_CAP}")
    window = _window(g_max)
    acc = {g: GenusCensus(g) for g in range(g_max + 1)}
    cache: dict = {}
    frontier_genus = min(_FRONTIER_GENUS, g_max)
    frontier = []

    stack = [_root(window)]
    while stack:
        node = stack.pop()
        if workers > 1 and node[4] == frontier_genus and node[4] < g_max:
            _tally(node, acc, classes, cache)
            frontier.append(node)
            continue
        _tally(node, acc, classes, cache)
        if node[4] < g_max:
            for p in reversed(_child_generators(node, window)):
                stack.append(_remove_generator(node, p, window))

    if frontier:
        jobs = []
        for node in frontier:
            for p in _child_generators(node, window):
                jobs.append((_remove_generator(node, p, window), g_max,
                             window, classes))
        with get_context("fork").Pool(workers) as pool:
            for part in pool.imap_unordered(_subtree_job, jobs):
                for g, stats in part.items():
                    acc[g].merge(stats)
    return acc


def census(genus: int, workers: int = 1, classes: bool = True) -> GenusCensus:
    """Census of one genus (runs the tree down to it)."""
    return run_census(genus, workers=workers, classes=classes)[genus]


@dataclass
class WilfReport:
    """Outcome of the Wilf verification sweep up to a genus bound."""

    genus_max: int
    total: int
    violations: list
    bucket_p_ge_third_m: int            # 3|P| >= m
    bucket_p_le_3: int
    bucket_q_le_3: int
    bucket_p_ge_half_m: int
    covered: int                    # in at least one known-case bucket
    per_genus: dict[int, GenusCensus]


def verify_wilf_range(g_max: int, workers: int = 1) -> WilfReport:
    """Check |P||L| >= c over every semigroup of genus <= g_max.

    Raises WilfCounterexample (with the offending generator lists) if the
    inequality ever fails; that would be a sensational bug.
    """
    acc = run_census(g_max, workers=workers, classes=False)
    violations = sorted(
        v for stats in acc.values() for v in stats.wilf_violations)
    if violations:
        raise WilfCounterexample(
            f"Wilf inequality failed for {violations!r}")
    covered = sum(s.bucket_covered for s in acc.values())
    return WilfReport(
        genus_max=g_max,
        total=sum(s.count_ng for s in acc.values()),
        violations=violations,
        bucket_p_ge_third_m=sum(s.bucket_p_ge_third_m for s in acc.values()),
        bucket_p_le_3=sum(s.bucket_p_le_3 for s in acc.values()),
        bucket_q_le_3=sum(s.bucket_q_le_3 for s in acc.values()),
        bucket_p_ge_half_m=sum(s.bucket_p_ge_half_m for s in acc.values()),
        covered=covered,
        per_genus=acc,
    )


def sample_semigroups(genus: int, count: int, seed: int
                      ) -> list[NumericalSemigroup]:
    """Deterministic random descents to the requested genus.

    Paths that dead-end early (leaves of the tree) are retried; the result
    may repeat semigroups at small genus.
    """
    if not 0 <= genus <= GENUS_HARD_CAP:
        raise ValueError(f"genus must be within 0..{GENUS_HARD_CAP}")
    rng = random.Random(seed)
    window = _window(genus)
    out = []
    while len(out) < count:
        node = _root(window)
        while node[4] < genus:
            gens = _child_generators(node, window)
            if not gens:
                break
            node = _remove_generator(node, rng.choice(gens), window)
        if node[4] == genus:
            out.append(_node_semigroup(node))
    return out
