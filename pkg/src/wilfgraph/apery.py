"""Apery set, depth function, layer partition and the Wilf quantity W(S).

For a semigroup of multiplicity m and conductor c, the depth of a member x is
the unique integer d with x + d*m in [c, c+m); the depth of S itself is
q = ceil(c/m) = depth(0), and rho = q*m - c lies in [0, m). The nonzero Apery
elements X (one per nonzero class mod m) carry the total depth tau(X), which
ties the count of small elements to q via |L| = q + tau(X) and gives the
second formula for W(S) = |P||L| - c, namely |P|*tau(X) - |X n D|*q + rho.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAMember
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class AperyAnalysis:
    """Apery-side invariants of one semigroup."""

    apery_x: tuple[int, ...]
    depth_of: dict[int, int]        # delta on X union {0}
    depth_q: int
    rho: int
    tau_x: int
    x_primitive: frozenset[int]
    x_decomposable: frozenset[int]
    wilf_w: int


def apery_set(S: NumericalSemigroup) -> tuple[int, ...]:
    """Nonzero Apery elements: members x with x - m not a member. Sorted."""
    m, c = S.multiplicity, S.conductor
    return tuple(x for x in range(m + 1, c + m)
                 if S.is_member(x) and not S.is_member(x - m))


def depth(S: NumericalSemigroup, x: int) -> int:
    """delta(x) = ceil((c - x)/m); requires x to be a member.

    Defined on all of S: elements in [c, c+m) have depth 0, elements beyond
    have negative depth, small elements have positive depth.
    """
    if not S.is_member(x):
        raise NotAMember(f"{x} is not in {S!r}")
    return -((x - S.conductor) // S.multiplicity)


def layer_index(S: NumericalSemigroup, x: int) -> int:
    """Index i of the layer S_i containing the member x; equals q - delta(x)."""
    q = -(-S.conductor // S.multiplicity)
    return q - depth(S, x)


def total_depth(S: NumericalSemigroup, elements) -> int:
    """tau(A): the sum of depths over a finite subset A of S."""
    return sum(depth(S, x) for x in elements)


def wilf_w(S: NumericalSemigroup) -> int:
    """W(S) = |P||L| - c; nonnegative iff S satisfies the Wilf inequality."""
    return len(S.min_generators) * len(S.small_elements()) - S.conductor


def analyze(S: NumericalSemigroup) -> AperyAnalysis:
    m, c = S.multiplicity, S.conductor
    q = -(-c // m)
    rho = q * m - c
    x = apery_set(S)
    depth_of = {0: q}
    for v in x:
        depth_of[v] = -((v - c) // m)
    tau = sum(depth_of[v] for v in x)
    prim = frozenset(S.min_generators)
    x_prim = frozenset(v for v in x if v in prim)
    x_dec = frozenset(x) - x_prim
    w = len(prim) * tau - len(x_dec) * q + rho
    assert w == wilf_w(S)              # Wilf formula identity
    assert m == len(prim) + len(x_dec)
    return AperyAnalysis(x, depth_of, q, rho, tau, x_prim, x_dec, w)


def wilf_w_apery(S: NumericalSemigroup) -> int:
    """W(S) computed from the Apery side: |P|*tau(X) - |X n D|*q + rho."""
    a = analyze(S)
    return len(S.min_generators) * a.tau_x - len(a.x_decomposable) * a.depth_q \
        + a.rho


def _layer(S: NumericalSemigroup, i: int, rho: int) -> list[int]:
    m = S.multiplicity
    lo, hi = i * m - rho, i * m + m - rho
    return [v for v in range(max(lo, 0), hi) if S.is_member(v)]


def check_addition_rule(S: NumericalSemigroup, i: int, j: int) -> bool:
    """Whether S_i + S_j lands in layers {i+j-1, i+j, i+j+1}.

    When rho = 0 the lower layer i+j-1 is additionally excluded. Each layer
    is a width-m window, hence finite; sums beyond the table fall under the
    x >= c membership rule.
    """
    m, c = S.multiplicity, S.conductor
    q = -(-c // m)
    rho = q * m - c
    allowed = {i + j, i + j + 1}
    if rho != 0:
        allowed.add(i + j - 1)
    si, sj = _layer(S, i, rho), _layer(S, j, rho)
    for a in si:
        for b in sj:
            if (a + b + rho) // m not in allowed:
                return False
    return True


def summand_closure_check(S: NumericalSemigroup) -> bool:
    """Every summand of a nonzero Apery element is again one.

    Checks all decompositions z = a + b over S* for every decomposable z in X.
    """
    m = S.multiplicity
    x = set(apery_set(S))
    for z in x:
        for a in range(m, z - m + 1):
            if S.is_member(a) and S.is_member(z - a):
                if a not in x or z - a not in x:
                    return False
    return True


def report(S: NumericalSemigroup) -> dict:
    """JSON-ready summary of the core and Apery invariants."""
    a = analyze(S)
    return {
        "gens": list(S.min_generators),
        "m": S.multiplicity,
        "f": S.frobenius,
        "c": S.conductor,
        "g": S.genus,
        "q": a.depth_q,
        "rho": a.rho,
        "P": list(S.min_generators),
        "X": list(a.apery_x),
        "X_cap_D": sorted(a.x_decomposable),
        "L_size": len(S.small_elements()),
        "tau_X": a.tau_x,
        "W": a.wilf_w,
    }
