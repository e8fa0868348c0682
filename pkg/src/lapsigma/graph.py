"""Simple undirected graphs stored as packed adjacency bitsets.

Vertices are 0-based.  A graph is an immutable value: every operation
returns a new :class:`Graph`.  Each row ``rows[i]`` is an int whose bit
``j`` is set iff ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((i, j) for j in range(1, n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    # per-instance memo for derived spectral data; never part of equality
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or row >> i & 1:
                raise ValueError(f"row {i} has a loop or out-of-range bit")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")
                r ^= low

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Build the graph whose edge set is the bitmask over :func:`pair_order`."""
        if n < 1 or mask < 0 or mask >> len(pair_order(n)):
            raise ValueError(f"mask {mask} out of range for n={n}")
        rows = [0] * n
        b = 0
        while mask:
            if mask & 1:
                i, j = pair_order(n)[b]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            mask >>= 1
            b += 1
        # symmetric and loop-free by construction, so skip validation
        G = object.__new__(cls)
        object.__setattr__(G, "n", n)
        object.__setattr__(G, "rows", tuple(rows))
        object.__setattr__(G, "_memo", {})
        return G

    @property
    def mask(self) -> int:
        out = 0
        for b, (i, j) in enumerate(pair_order(self.n)):
            if self.rows[i] >> j & 1:
                out |= 1 << b
        return out

    @property
    def degrees(self) -> tuple[int, ...]:
        d = self._memo.get("degrees")
        if d is None:
            d = self._memo["degrees"] = tuple(r.bit_count() for r in self.rows)
        return d

    @property
    def m(self) -> int:
        m = self._memo.get("m")
        if m is None:
            m = self._memo["m"] = sum(self.degrees) // 2
        return m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.rows[v]
        return [j for j in range(self.n) if row >> j & 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.rows[i] >> j & 1]

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeStats:
    degrees: tuple[int, ...]   # non-increasing
    delta1: int
    delta2: int | None         # None when n == 1
    k: int | None              # largest k with d_2 = ... = d_k = delta2 (1-based)
    avg_deg: Fraction


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {(u, v)} has a vertex outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop {(u, v)} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(G.rows)))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    shift = G1.n
    return Graph(G1.n + G2.n, G1.rows + tuple(r << shift for r in G2.rows))


def join(G1: Graph, G2: Graph) -> Graph:
    n1, n2 = G1.n, G2.n
    left = ((1 << n2) - 1) << n1
    right = (1 << n1) - 1
    rows = tuple(r | left for r in G1.rows) + tuple((r << n1) | right for r in G2.rows)
    return Graph(n1 + n2, rows)


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
        raise ValueError(f"edge {(u, v)} is not in the graph")
    rows = list(G.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.n, tuple(rows))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Vertex ``i`` of ``G`` becomes vertex ``perm[i]``."""
    if sorted(perm) != list(range(G.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return from_edges(G.n, [(perm[i], perm[j]) for i, j in G.edges()])


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    return from_edges(len(vertices), [(index[u], index[v]) for u, v in G.edges()
                                      if u in index and v in index])


def degree_stats(G: Graph) -> DegreeStats:
    d = tuple(sorted(G.degrees, reverse=True))
    avg = Fraction(sum(d), G.n)
    if G.n == 1:
        return DegreeStats(d, d[0], None, None, avg)
    k = 2
    while k < G.n and d[k] == d[1]:
        k += 1
    return DegreeStats(d, d[0], d[1], k, avg)


def common_neighbors(G: Graph, u: int, v: int) -> int:
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices")
    return (G.rows[u] & G.rows[v]).bit_count()


def component_vertex_sets(G: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(G.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= G.rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append([v for v in range(G.n) if comp >> v & 1])
    return out


def components(G: Graph) -> list[tuple[Graph, list[int]]]:
    """Connected components, each paired with its original vertex labels."""
    return [(induced_subgraph(G, vs), vs) for vs in component_vertex_sets(G)]


def is_connected(G: Graph) -> bool:
    return len(component_vertex_sets(G)) == 1


# -- named families ---------------------------------------------------------
# Canonical order: star centres first, then leaves, then isolated vertices.

def complete(n: int) -> Graph:
    return complement(empty(n))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return from_edges(n, [(0, j) for j in range(1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 1 or s < 1:
        raise ValueError("complete_bipartite needs r >= 1 and s >= 1")
    return join(empty(r), empty(s))


def double_star(p: int, q: int) -> Graph:
    """DS_{p,q}: adjacent centres 0 and 1 of degrees p and q."""
    if not p >= q >= 2:
        raise ValueError("double_star needs p >= q >= 2")
    n = p + q
    edges = [(0, 1)] + [(0, j) for j in range(2, p + 1)] + [(1, j) for j in range(p + 1, n)]
    return from_edges(n, edges)


def star_plus_isolated(n: int, r: int) -> Graph:
    """K_{1,n-r-1} ∪ rK_1."""
    if not 0 <= r <= n - 2:
        raise ValueError("star_plus_isolated needs 0 <= r <= n-2")
    return disjoint_union(star(n - r), empty(r)) if r else star(n)


def t2_family(n: int, r: int) -> Graph:
    """(K_1 ∪ K_{n-r-1}) ∨ K_r, the complement of star_plus_isolated(n, r)."""
    if not 0 <= r <= n - 2:
        raise ValueError("t2_family needs 0 <= r <= n-2")
    base = disjoint_union(empty(1), complete(n - r - 1))
    return join(base, complete(r)) if r else base


def two_cliques(n: int) -> Graph:
    if n < 2 or n % 2:
        raise ValueError("two_cliques needs an even n >= 2")
    return disjoint_union(complete(n // 2), complete(n // 2))


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


FAMILIES = {
    "complete": (complete, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "double_star": (double_star, 2),
    "empty": (empty, 1),
    "star_plus_isolated": (star_plus_isolated, 2),
    "t2_family": (t2_family, 2),
    "two_cliques": (two_cliques, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
}


def family(name: str, *params: int) -> Graph:
    try:
        build, arity = FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise ValueError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return build(*params)
