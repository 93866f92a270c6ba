"""Loopy graphs: finite graphs with loops, no multi-edges, no isolated vertices.

Provides the graph type, JSON/DOT serialization, canonical labeling (loop
status acts as a vertex color), an isomorph-rejected catalog of all loopy
graphs on few vertices, and a seeded random generator for sampled suites.
"""

from __future__ import annotations

from .errors import TooLarge

# Genus-20 censuses produce associated graphs on up to 18 vertices, so the
# canonical-labeling cap leaves headroom beyond that.
_MAX_CANONICAL = 32
_MAX_CATALOG = 7


class LoopyGraph:
    """Undirected graph with optional loops; every vertex meets an edge.

    ``true_edges`` holds sorted 2-tuples of distinct vertices, ``loops`` the
    loopy vertices. Vertex labels only need to be sortable and hashable;
    associated graphs of semigroups use the Apery elements themselves.
    """

    __slots__ = ("vertices", "true_edges", "loops", "_pos", "_adj", "_loopmask")

    def __init__(self, vertices, true_edges=(), loops=()):
        self.vertices = tuple(sorted(set(vertices)))
        vset = set(self.vertices)
        edges = set()
        for a, b in true_edges:
            if a == b:
                raise ValueError(f"loop {a!r} passed as a true edge")
            if a not in vset or b not in vset:
                raise ValueError(f"edge ({a!r}, {b!r}) leaves the vertex set")
            edges.add((a, b) if a <= b else (b, a))
        self.true_edges = frozenset(edges)
        self.loops = frozenset(loops)
        if not self.loops <= vset:
            raise ValueError("loop at a vertex outside the vertex set")
        touched = set(self.loops)
        for a, b in edges:
            touched.add(a)
            touched.add(b)
        isolated = vset - touched
        if isolated:
            raise ValueError(f"isolated vertices not allowed: {sorted(isolated)}")
        # positional bitmask form used by matching and canonical labeling
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        adj = [0] * len(self.vertices)
        for a, b in edges:
            adj[self._pos[a]] |= 1 << self._pos[b]
            adj[self._pos[b]] |= 1 << self._pos[a]
        self._adj = tuple(adj)
        self._loopmask = sum(1 << self._pos[v] for v in self.loops)

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.true_edges) + len(self.loops)

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    def all_edges(self) -> list[tuple]:
        """True edges plus loops, a loop at v appearing as (v, v). Sorted."""
        return sorted(self.true_edges) + sorted((v, v) for v in self.loops)

    def neighbors(self, v) -> set:
        """N(v): adjacent vertices, including v itself when v is loopy."""
        i = self._pos[v]
        out = {self.vertices[j] for j in range(self.n) if self._adj[i] >> j & 1}
        if v in self.loops:
            out.add(v)
        return out

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a, b) -> bool:
        if a == b:
            return a in self.loops
        return ((a, b) if a <= b else (b, a)) in self.true_edges

    def __eq__(self, other):
        if not isinstance(other, LoopyGraph):
            return NotImplemented
        return (self.vertices == other.vertices
                and self.true_edges == other.true_edges
                and self.loops == other.loops)

    def __hash__(self):
        return hash((self.vertices, self.true_edges, self.loops))

    def __repr__(self):
        return (f"LoopyGraph(n={self.n}, edges={sorted(self.true_edges)}, "
                f"loops={sorted(self.loops)})")

    # -- derived graphs ------------------------------------------------------

    def without_vertices(self, drop) -> "LoopyGraph":
        """Induced subgraph on the complement of ``drop``, isolated vertices pruned."""
        drop = set(drop)
        edges = [(a, b) for a, b in self.true_edges
                 if a not in drop and b not in drop]
        loops = [v for v in self.loops if v not in drop]
        touched = {v for e in edges for v in e} | set(loops)
        return LoopyGraph(touched, edges, loops)

    def with_edge(self, a, b) -> "LoopyGraph":
        if a == b:
            return LoopyGraph(self.vertices, self.true_edges,
                              set(self.loops) | {a})
        return LoopyGraph(self.vertices, set(self.true_edges) | {(a, b)},
                          self.loops)

    def relabeled(self, mapping) -> "LoopyGraph":
        return LoopyGraph([mapping[v] for v in self.vertices],
                          [(mapping[a], mapping[b]) for a, b in self.true_edges],
                          [mapping[v] for v in self.loops])

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in sorted(self.true_edges)],
            "loops": sorted(self.loops),
        }

    @classmethod
    def from_json(cls, data: dict) -> "LoopyGraph":
        return cls(data["vertices"],
                   [tuple(e) for e in data.get("edges", ())],
                   data.get("loops", ()))

    def to_dot(self, weak=(), active=()) -> str:
        """Graphviz source; loops as self-edges, weak dashed, active bold."""
        weak = set(weak)
        active = set(active)
        lines = ["graph G {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e in self.all_edges():
            attrs = []
            if e in weak:
                attrs.append("style=dashed")
            if e in active:
                attrs.append("penwidth=2.0")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{e[0]}" -- "{e[1]}"{suffix};')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def canonical_key(self) -> str:
        """Relabeling-invariant key; equal keys iff loopy-isomorphic graphs."""
        return _canonical_key(self.n, self._adj, self._loopmask)


def loopy_complete(n: int) -> LoopyGraph:
    """LK_n: complete graph on 0..n-1 with a loop at every vertex."""
    verts = range(n)
    return LoopyGraph(verts, [(i, j) for i in verts for j in verts if i < j],
                      verts)


# -- canonical labeling ------------------------------------------------------
#
# Individualization-refinement over the partition by (loop status, degree),
# with orbit pruning from automorphisms discovered at equal leaves. The key is
# the minimum adjacency encoding over the leaves of the search tree; it fully
# encodes the graph, so equal keys always decode to isomorphic graphs.


def _refine(cells, adj):
    while True:
        changed = False
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for count in sorted(groups):
                        new_cells.append(groups[count])
            cells = new_cells
            if changed:
                break
        if not changed:
            return cells


def _encode(order, adj, loopmask):
    n = len(order)
    loops_bits = 0
    adj_bits = 0
    bit = 0
    for i, v in enumerate(order):
        if loopmask >> v & 1:
            loops_bits |= 1 << i
        row = adj[v]
        for j in range(i + 1, n):
            if row >> order[j] & 1:
                adj_bits |= 1 << bit
            bit += 1
    return loops_bits, adj_bits


def _same_orbit(u, v, gens, n):
    if not gens:
        return False
    seen = {u}
    frontier = [u]
    while frontier:
        w = frontier.pop()
        for g in gens:
            img = g[w]
            if img not in seen:
                if img == v:
                    return True
                seen.add(img)
                frontier.append(img)
    return False


def _canonical_key(n, adj, loopmask) -> str:
    if n > _MAX_CANONICAL:
        raise TooLarge(f"canonical labeling supports at most {_MAX_CANONICAL} "
                       f"vertices, got {n}")
    if n == 0:
        return "0:0:0"

    by_color: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        key = (loopmask >> v & 1, adj[v].bit_count())
        by_color.setdefault(key, []).append(v)
    initial = [by_color[k] for k in sorted(by_color)]

    best: tuple[int, int] | None = None
    first: tuple[tuple[int, ...], tuple[int, int]] | None = None
    aut_gens: list[list[int]] = []

    def visit_leaf(order):
        nonlocal best, first
        enc = _encode(order, adj, loopmask)
        if first is None:
            first = (order, enc)
        elif enc == first[1]:
            # order and first[0] induce the same labeled graph: automorphism
            perm = [0] * n
            for pos in range(n):
                perm[order[pos]] = first[0][pos]
            if perm not in aut_gens:
                aut_gens.append(perm)
        if best is None or enc < best:
            best = enc

    def search(cells, base):
        target = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            visit_leaf(tuple(v for cell in cells for v in cell))
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            applicable = [g for g in aut_gens if all(g[b] == b for b in base)]
            if any(_same_orbit(v, u, applicable, n) for u in explored):
                continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            branched = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(branched, adj), base + (v,))

    search(_refine(initial, adj), ())
    assert best is not None
    return f"{n}:{best[0]:x}:{best[1]:x}"


# -- catalog of all loopy graphs --------------------------------------------


_catalog_cache: dict[int, tuple[LoopyGraph, ...]] = {}


def all_loopy_graphs(n: int) -> tuple[LoopyGraph, ...]:
    """All loopy graphs on exactly n vertices, one per isomorphism class.

    Built by vertex augmentation with canonical-key rejection; intermediate
    levels keep isolated vertices (any graph arises by deleting its last
    vertex), the final level drops them to honor the loopy-graph contract.
    """
    if n < 0 or n > _MAX_CATALOG:
        raise ValueError(f"catalog supports 0 <= n <= {_MAX_CATALOG}, got {n}")
    if n in _catalog_cache:
        return _catalog_cache[n]

    level: dict[str, tuple[tuple[int, ...], int]] = {"0:0:0": ((), 0)}
    for k in range(1, n + 1):
        nxt: dict[str, tuple[tuple[int, ...], int]] = {}
        new_bit = 1 << (k - 1)
        for adj, loopmask in level.values():
            for nbrs in range(1 << (k - 1)):
                grown = [row | new_bit if nbrs >> i & 1 else row
                         for i, row in enumerate(adj)]
                grown.append(nbrs)
                grown = tuple(grown)
                for loop in (0, new_bit):
                    lm = loopmask | loop
                    key = _canonical_key(k, grown, lm)
                    if key not in nxt:
                        nxt[key] = (grown, lm)
        level = nxt

    graphs = []
    for key in sorted(level):
        adj, loopmask = level[key]
        if any(adj[v] == 0 and not loopmask >> v & 1 for v in range(n)):
            continue
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if adj[i] >> j & 1]
        loops = [v for v in range(n) if loopmask >> v & 1]
        graphs.append(LoopyGraph(range(n) if n else (), edges, loops))
    _catalog_cache[n] = tuple(graphs)
    return _catalog_cache[n]


def random_loopy_graph(rng, min_vertices=2, max_vertices=8, max_edges=12
                       ) -> LoopyGraph:
    """Seeded random loopy graph with at most ``max_edges`` edges."""
    while True:
        n = rng.randint(min_vertices, max_vertices)
        candidates = [(i, j) for i in range(n) for j in range(i, n)]
        rng.shuffle(candidates)
        count = rng.randint(1, max_edges)
        chosen = candidates[:count]
        edges = [(a, b) for a, b in chosen if a != b]
        loops = [a for a, b in chosen if a == b]
        touched = sorted({v for e in edges for v in e} | set(loops))
        if not touched:
            continue
        relabel = {v: i for i, v in enumerate(touched)}
        return LoopyGraph(range(len(touched)),
                          [(relabel[a], relabel[b]) for a, b in edges],
                          [relabel[v] for v in loops])
