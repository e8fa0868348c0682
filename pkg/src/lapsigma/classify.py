"""Structural recognisers for the extremal and exceptional families.

Everything here works from degree sequences plus one adjacency pass; no
spectral data is consulted, so these predicates serve as the independent
side of every spectral characterisation check.

Where families overlap (K_2 is complete, a star and K_{1,1}) recognisers
report by precedence: complete, then star, then balanced complete
bipartite.  Membership predicates are plain booleans and ignore precedence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complement, component_vertex_sets


@dataclass(frozen=True)
class FamilyMatch:
    family: str            # "none" when nothing matched
    params: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.family != "none"


NONE = FamilyMatch("none")


def _is_clique(G: Graph, vs: list[int]) -> bool:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return all((G.rows[v] | 1 << v) & mask == mask for v in vs)


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def recognize_star_plus_isolated(G: Graph) -> FamilyMatch:
    """K_{1,n-r-1} ∪ rK_1, reported as params (n, r)."""
    deg = G.degrees
    s = max(deg)
    if s < 1:
        return NONE
    r = G.n - s - 1
    if sorted(deg, reverse=True) != [s] + [1] * s + [0] * r:
        return NONE
    if s == 1:
        return FamilyMatch("star_plus_isolated", (G.n, r))
    centre = deg.index(s)
    leaves = 0
    for v, d in enumerate(deg):
        if d == 1:
            leaves |= 1 << v
    if G.rows[centre] != leaves:
        return NONE
    return FamilyMatch("star_plus_isolated", (G.n, r))


def in_sigma1_range(n: int, r: int) -> bool:
    """0 <= r <= ceil(n/2) - 2, or r = n - 2."""
    return 0 <= r <= (n + 1) // 2 - 2 or r == n - 2


def in_exception_family_1mk1(G: Graph) -> bool:
    match = recognize_star_plus_isolated(G)
    return bool(match) and in_sigma1_range(G.n, match.params[1])


def sigma1_by_structure(G: Graph) -> bool:
    """Structural side of the sigma = 1 characterisation (meaningful for n >= 2)."""
    return in_exception_family_1mk1(G)


def in_exception_family_t2(G: Graph) -> bool:
    return in_exception_family_1mk1(complement(G))


def is_balanced_complete_bipartite(G: Graph) -> bool:
    """K_{n/2,n/2}: the complement is two disjoint cliques of order n/2."""
    n = G.n
    if n % 2 or G.m != n * n // 4:
        return False
    H = complement(G)
    comps = component_vertex_sets(H)
    return (len(comps) == 2 and all(len(c) == n // 2 for c in comps)
            and all(_is_clique(H, c) for c in comps))


def recognize_complete_bipartite(G: Graph) -> FamilyMatch:
    """K_{r,s} with r <= s, r >= 1."""
    H = complement(G)
    comps = component_vertex_sets(H)
    if len(comps) != 2 or not all(_is_clique(H, c) for c in comps):
        return NONE
    r, s = sorted(len(c) for c in comps)
    return FamilyMatch("K_{r,s}", (r, s))


def recognize_mu2_equality_family(G: Graph) -> FamilyMatch:
    """nK_1, K_{n/2,n/2}, or K_{1,n/2} ∪ (n/2 - 1)K_1."""
    n = G.n
    if G.m == 0:
        return FamilyMatch("nK1", (n,))
    if is_balanced_complete_bipartite(G):
        return FamilyMatch("K_{n/2,n/2}", (n // 2,))
    match = recognize_star_plus_isolated(G)
    if match and n % 2 == 0 and match.params[1] == n // 2 - 1:
        return match
    return NONE


def recognize_t2_equality_family(G: Graph) -> FamilyMatch:
    """K_n, 2K_{n/2}, or (K_1 ∪ K_{n/2}) ∨ K_{n/2-1}, via the complement."""
    dual = recognize_mu2_equality_family(complement(G))
    if dual.family == "nK1":
        return FamilyMatch("K_n", (G.n,))
    if dual.family == "K_{n/2,n/2}":
        return FamilyMatch("two_cliques", dual.params)
    if dual:
        return FamilyMatch("t2_equality", dual.params)
    return NONE


def recognize_t4(G: Graph) -> FamilyMatch:
    """K_n, K_{1,n-1} or K_{n/2,n/2}; the connected graphs with mu_2 = ... = mu_{n-1}."""
    if is_complete(G):
        return FamilyMatch("K_n", (G.n,))
    match = recognize_star_plus_isolated(G)
    if match and match.params[1] == 0:
        return FamilyMatch("K_{1,n-1}", (G.n,))
    if is_balanced_complete_bipartite(G):
        return FamilyMatch("K_{n/2,n/2}", (G.n // 2,))
    return NONE


def is_star(G: Graph) -> bool:
    match = recognize_star_plus_isolated(G)
    return bool(match) and match.params[1] == 0
