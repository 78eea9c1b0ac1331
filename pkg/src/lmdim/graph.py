"""Simple undirected graphs, products, distances and structural invariants.

Vertices are the integers ``0..order-1``.  Graphs are immutable; derived data
(adjacency, distances) is computed lazily and cached on the instance, so a
graph can be shared freely between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.order < 0:
            raise GraphError(f"negative order {self.order}")
        normalized = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise GraphError(f"edge ({u},{v}) out of range for order {self.order}")
            normalized.append((u, v) if u < v else (v, u))
        unique = sorted(set(normalized))
        if len(unique) != len(normalized):
            raise GraphError("duplicate edge")
        object.__setattr__(self, "edges", tuple(unique))
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.order:
                raise GraphError("label list length must equal the order")
            object.__setattr__(self, "labels", labels)

    # Equality and hashing ignore labels: two graphs with the same edge set on
    # the same vertex indices are the same graph.
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.edges == other.edges

    def __hash__(self):
        return hash((self.order, self.edges))

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return _bfs_all_pairs(self)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_complete(self) -> bool:
        return self.size == self.order * (self.order - 1) // 2

    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in increasing vertex order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = tuple(self.label(v) for v in keep) if self.labels else None
        return Graph(len(keep), tuple(edges), labels)

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.order, self.edges, tuple(labels))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; ``None`` marks an unreachable pair."""

    order: int
    dist: tuple[tuple[int | None, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int | None:
        i, j = pair
        return self.dist[i][j]

    def row(self, v: int) -> tuple[int | None, ...]:
        return self.dist[v]


def _bfs_all_pairs(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.order):
        d: list[int | None] = [None] * g.order
        d[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if d[y] is None:
                    d[y] = d[x] + 1
                    queue.append(y)
        rows.append(tuple(d))
    return DistanceMatrix(g.order, tuple(rows))


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first search from every vertex."""
    return g.distances


# -- products -----------------------------------------------------------------


def corona(g: Graph, h: Graph) -> Graph:
    """Corona product G ⊙ H.

    G occupies ``0..n-1``; copy ``i`` of H occupies the block
    ``n + i*n' .. n + (i+1)*n' - 1`` and every vertex in it is joined to ``i``.
    """
    if g.order < 1:
        raise GraphError("corona needs a base graph of order >= 1")
    n, m = g.order, h.order
    edges = list(g.edges)
    labels = [f"g{i}" for i in range(n)]
    for i in range(n):
        offset = n + i * m
        edges.extend((offset + u, offset + v) for u, v in h.edges)
        edges.extend((i, offset + x) for x in range(m))
        labels.extend(f"h{x}@copy{i}" for x in range(m))
    return Graph(n * (1 + m), tuple(edges), tuple(labels))


def join(g: Graph, h: Graph) -> Graph:
    """Join G + H with the vertices of ``g`` first."""
    n = g.order
    edges = list(g.edges)
    edges.extend((n + u, n + v) for u, v in h.edges)
    edges.extend((x, n + y) for x in range(n) for y in range(h.order))
    labels = [f"g{i}" for i in range(n)] + [f"h{j}" for j in range(h.order)]
    return Graph(n + h.order, tuple(edges), tuple(labels))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.order
    edges = list(g.edges) + [(n + u, n + v) for u, v in h.edges]
    labels = [f"g{i}" for i in range(n)] + [f"h{j}" for j in range(h.order)]
    return Graph(n + h.order, tuple(edges), tuple(labels))


# -- structure ----------------------------------------------------------------


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, listed by their lowest vertex."""
    seen = [False] * g.order
    comps = []
    for s in range(g.order):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring (U1, U2), or ``None`` if ``g`` has an odd cycle.

    In every component the lowest-index vertex is put in U1, so the colouring
    of a disconnected graph is fixed.
    """
    color: list[int | None] = [None] * g.order
    for comp in components(g):
        root = comp[0]
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] is None:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    u1 = frozenset(v for v in range(g.order) if color[v] == 0)
    u2 = frozenset(v for v in range(g.order) if color[v] == 1)
    return u1, u2


def eccentricities(g: Graph) -> list[int | None]:
    """Eccentricity per vertex; ``None`` everywhere if ``g`` is disconnected."""
    d = g.distances
    ecc = []
    for v in range(g.order):
        row = d.row(v)
        if any(x is None for x in row):
            return [None] * g.order
        ecc.append(max(row))
    return ecc


def girth(g: Graph) -> int | None:
    best = None
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cycle = dist[x] + dist[y] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def clique_number(g: Graph) -> int:
    """Size of a largest clique (Bron–Kerbosch with pivoting on bitmasks)."""
    if g.order == 0:
        return 0
    adj = g.adjacency_masks
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if cand == 0:
            if excl == 0 and size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pivot_pool = cand | excl
        pivot = max(_bits(pivot_pool), key=lambda u: (cand & adj[u]).bit_count())
        for v in _bits(cand & ~adj[pivot]):
            bit = 1 << v
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    expand(0, (1 << g.order) - 1, 0)
    return best


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class StructuralInvariants:
    connected: bool
    bipartition: tuple[frozenset[int], frozenset[int]] | None
    radius: int | None
    diameter: int | None
    center: tuple[int, ...]
    girth: int | None
    clique_number: int
    components: tuple[tuple[int, ...], ...]

    @property
    def bipartite(self) -> bool:
        return self.bipartition is not None


def structural_invariants(g: Graph) -> StructuralInvariants:
    """Radius, diameter and center are ``None``/empty for disconnected graphs."""
    comps = tuple(components(g))
    connected = len(comps) <= 1
    if connected and g.order > 0:
        ecc = eccentricities(g)
        radius = min(ecc)
        diameter = max(ecc)
        center = tuple(v for v in range(g.order) if ecc[v] == radius)
    else:
        radius = diameter = None
        center = ()
    return StructuralInvariants(
        connected=connected,
        bipartition=bipartition(g),
        radius=radius,
        diameter=diameter,
        center=center,
        girth=girth(g),
        clique_number=clique_number(g),
        components=comps,
    )


def radius(g: Graph) -> int | None:
    ecc = eccentricities(g)
    return min(ecc) if ecc and ecc[0] is not None else None


def diameter(g: Graph) -> int | None:
    ecc = eccentricities(g)
    return max(ecc) if ecc and ecc[0] is not None else None


def center(g: Graph) -> tuple[int, ...]:
    ecc = eccentricities(g)
    if not ecc or ecc[0] is None:
        return ()
    r = min(ecc)
    return tuple(v for v in range(g.order) if ecc[v] == r)


def neighborhood_shell(g: Graph, a: int, i: int) -> frozenset[int]:
    """Vertices at distance exactly ``i`` from ``a``."""
    if not 0 <= a < g.order:
        raise GraphError(f"vertex {a} out of range")
    row = g.distances.row(a)
    return frozenset(w for w in range(g.order) if row[w] == i)


def dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``b - a`` has a neighbour in ``a``."""
    a = set(a)
    return all(g.adjacency[x] & a for x in set(b) - a)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by degree-constrained backtracking."""
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.order
    if n == 0:
        return True
    # Map g's vertices in BFS order so each new vertex has mapped neighbours.
    order: list[int] = []
    seen = set()
    for comp in components(g):
        queue = deque([max(comp, key=g.degree)])
        seen.add(queue[0])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(g.adjacency[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    gdeg, hdeg = g.degrees(), h.degrees()
    mapping: dict[int, int] = {}
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        for y in range(n):
            if used[y] or hdeg[y] != gdeg[x]:
                continue
            if all((y in h.adjacency[mapping[p]]) == (p in g.adjacency[x]) for p in mapping):
                mapping[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                del mapping[x]
                used[y] = False
        return False

    return extend(0)


# -- edge-list files ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; '#' lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list: missing 'n m' header")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise GraphError(f"malformed header {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"malformed edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"malformed edge line {ln!r}") from None
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.order} {g.size}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_edge_list(g, comment))


