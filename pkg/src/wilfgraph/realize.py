"""Realizing an arbitrary loopy graph as the associated graph of a semigroup.

Pick a multiplicity m and offsets m/3 <= x_1 < ... < x_n < (m-1)/2 whose
pairwise sums are all distinct (a Sidon condition). The truncated semigroup
<m, m+x_1, ..., m+x_n> cut at 2m realizes the loopy-complete graph LK_n;
adding the generator m + x_i + x_j erases the edge between m + x_i and
m + x_j, so any target graph is reached by erasing the non-edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RealizationFailed, WindowTooSmall
from .loopy import LoopyGraph
from .semigroup import NumericalSemigroup, from_generators_truncated
from .semigraph import build_graph


def sidon_offsets(n: int, m: int) -> tuple[int, ...]:
    """Greedy Sidon sequence of length n inside [ceil(m/3), (m-1)/2).

    Pairwise sums, doubles included, are distinct. Raises WindowTooSmall when
    the window cannot host n such values.
    """
    lo = -(-m // 3)
    hi = (m - 2) // 2          # largest x with 2x < m - 1
    chosen: list[int] = []
    sums: set[int] = set()
    for x in range(lo, hi + 1):
        if len(chosen) == n:
            break
        candidate_sums = [x + y for y in chosen] + [2 * x]
        if all(s not in sums for s in candidate_sums):
            chosen.append(x)
            sums.update(candidate_sums)
    if len(chosen) < n:
        raise WindowTooSmall(
            f"no {n}-term Sidon sequence in [{lo}, {hi}] for m = {m}")
    return tuple(chosen)


@dataclass(frozen=True)
class RealizationPlan:
    """A constructed semigroup whose associated graph matches the target."""

    target: LoopyGraph
    multiplicity: int
    offsets: tuple[int, ...]
    erase_generators: tuple[int, ...]
    result: NumericalSemigroup
    vertex_map: dict

    def certificate(self) -> dict:
        return {
            "m": self.multiplicity,
            "offsets": list(self.offsets),
            "erased": list(self.erase_generators),
            "gens": list(self.result.min_generators),
            "truncation": 2 * self.multiplicity,
            "verified": verify_realization(self),
        }


def plan_with_offsets(G: LoopyGraph, m: int, offsets) -> RealizationPlan:
    """Build the construction for explicit m and offsets, without verifying.

    Use verify_realization to check the certificate; offsets outside the
    guaranteed window are allowed (their modular distinctness decides).
    """
    offsets = tuple(offsets)
    if len(offsets) != G.n:
        raise ValueError(f"need {G.n} offsets, got {len(offsets)}")
    verts = G.vertices
    index = {v: i for i, v in enumerate(verts)}
    erase = []
    for i in range(G.n):
        for j in range(i, G.n):
            if not G.has_edge(verts[i], verts[j]):
                erase.append(m + offsets[i] + offsets[j])
    gens = [m] + [m + x for x in offsets] + erase
    S = from_generators_truncated(gens, 2 * m)
    vmap = {v: m + offsets[index[v]] for v in verts}
    return RealizationPlan(G, m, offsets, tuple(sorted(erase)), S, vmap)


def _modular_certificate(plan: RealizationPlan) -> bool:
    """The offsets and their pairwise sums are nonzero, distinct mod m, and
    the doubled generator set lands in [c, c+m)."""
    m = plan.multiplicity
    xs = plan.offsets
    values = list(xs) + [xs[i] + xs[j]
                         for i in range(len(xs)) for j in range(i, len(xs))]
    residues = {v % m for v in values}
    if 0 in residues or len(residues) != len(values):
        return False
    c = plan.result.conductor
    return all(c <= 2 * m + xs[i] + xs[j] < c + m
               for i in range(len(xs)) for j in range(i, len(xs)))


def verify_realization(plan: RealizationPlan) -> bool:
    """Modular certificate first (cheap), then isomorphism of the rebuilt graph."""
    if plan.offsets and not _modular_certificate(plan):
        return False
    rebuilt = build_graph(plan.result)
    return rebuilt.canonical_key() == plan.target.canonical_key()


def realize(G: LoopyGraph, min_multiplicity: int = 2) -> RealizationPlan:
    """Smallest-multiplicity realization of G via the greedy Sidon offsets.

    Raises RealizationFailed if the rebuilt graph is not isomorphic to the
    target (a construction bug, not a mathematical obstruction).
    """
    n = G.n
    m = max(min_multiplicity, 2)
    while True:
        try:
            offsets = sidon_offsets(n, m)
            break
        except WindowTooSmall:
            m += 1
    plan = plan_with_offsets(G, m, offsets)
    if not verify_realization(plan):
        raise RealizationFailed(
            f"rebuilt graph differs from target for m={m}, offsets={offsets}")
    return plan
