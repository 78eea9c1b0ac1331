"""Graph families and their canonical textual form.

A family string is a prefix expression whose tokens are separated by ``:`` or
``,``; every kind has a fixed arity, so nesting needs no brackets::

    path:7
    complete-bipartite:3,4
    corona:path:2,cycle:5
    corona:join:complete:1,cycle:4,empty:2
    spider:3-3-2
    named:figure1
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Union

from .errors import FamilyError
from .graph import Graph, corona, disjoint_union, join, read_edge_list, structural_invariants

Param = Union[int, str, "FamilySpec"]

# kind -> parameter codes: "i" int, "s" free token, "f" nested spec
KINDS: dict[str, str] = {
    "path": "i",
    "cycle": "i",
    "complete": "i",
    "complete-bipartite": "ii",
    "star": "i",
    "empty": "i",
    "pseudo-sphere": "i",
    "projective-plane": "i",
    "spider": "s",
    "tree": "s",
    "random-bipartite": "ii",
    "graph6": "s",
    "named": "s",
    "file": "s",
    "corona": "ff",
    "join": "ff",
    "union": "ff",
}

ALIASES = {
    "kbip": "complete-bipartite",
    "bipartite": "complete-bipartite",
    "sphere": "pseudo-sphere",
    "plane": "projective-plane",
    "g6": "graph6",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[Param, ...] = ()

    def __str__(self) -> str:
        parts = []
        for p in self.params:
            parts.append(str(p))
        return self.kind + (":" + ",".join(parts) if parts else "")

    def build(self) -> Graph:
        return build_family(self)


def parse_family(text: str) -> FamilySpec:
    tokens = re.split(r"[:,]", text.strip())
    spec, pos = _parse_tokens(tokens, 0, text)
    if pos != len(tokens):
        raise FamilyError(f"trailing tokens in family string {text!r}")
    return spec


def _parse_tokens(tokens: list[str], pos: int, text: str) -> tuple[FamilySpec, int]:
    if pos >= len(tokens):
        raise FamilyError(f"family string {text!r} ends early")
    kind = tokens[pos].strip().lower()
    kind = ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise FamilyError(f"unknown family kind {tokens[pos]!r}")
    pos += 1
    params: list[Param] = []
    for code in KINDS[kind]:
        if code == "f":
            sub, pos = _parse_tokens(tokens, pos, text)
            params.append(sub)
            continue
        if pos >= len(tokens):
            raise FamilyError(f"{kind} expects {len(KINDS[kind])} parameter(s) in {text!r}")
        tok = tokens[pos].strip()
        pos += 1
        if code == "i":
            try:
                params.append(int(tok))
            except ValueError:
                raise FamilyError(f"{kind}: expected an integer, got {tok!r}") from None
        else:
            params.append(tok)
    return FamilySpec(kind, tuple(params)), pos


# -- generators ---------------------------------------------------------------


def path_graph(t: int) -> Graph:
    _require(t >= 1, "path needs t >= 1")
    return Graph(t, tuple((i, i + 1) for i in range(t - 1)))


def cycle_graph(t: int) -> Graph:
    _require(t >= 3, "cycle needs t >= 3")
    return Graph(t, tuple((i, (i + 1) % t) for i in range(t)))


def complete_graph(t: int) -> Graph:
    _require(t >= 1, "complete needs t >= 1")
    return Graph(t, tuple(combinations(range(t), 2)))


def complete_bipartite(r: int, s: int) -> Graph:
    _require(r >= 1 and s >= 1, "complete-bipartite needs r, s >= 1")
    return Graph(r + s, tuple((i, r + j) for i in range(r) for j in range(s)))


def star_graph(t: int) -> Graph:
    """K_{1,t}: centre 0 and ``t`` leaves."""
    _require(t >= 1, "star needs t >= 1")
    return complete_bipartite(1, t)


def empty_graph(t: int) -> Graph:
    _require(t >= 1, "empty needs t >= 1")
    return Graph(t)


def pseudo_sphere(t: int) -> Graph:
    """Near pencil S_t: ``t-1`` paths a-x-y-b glued at poles a=0, b=1.

    Order 2t.  Path ``k`` uses vertices ``2+2k`` (next to a) and ``3+2k``
    (next to b).
    """
    _require(t >= 3, "pseudo-sphere needs t >= 3")
    edges = []
    labels = ["a", "b"]
    for k in range(t - 1):
        x, y = 2 + 2 * k, 3 + 2 * k
        edges += [(0, x), (x, y), (y, 1)]
        labels += [f"x{k}", f"y{k}"]
    return Graph(2 * t, tuple(edges), tuple(labels))


def is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalised representatives of PG(2, q): first non-zero coordinate is 1."""
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    return pts


def projective_plane(q: int) -> Graph:
    """Point/line incidence graph of PG(2, q) for prime ``q``.

    Points take indices ``0..N-1`` and lines ``N..2N-1`` with N = q²+q+1;
    a line is the dual of a normalised vector and contains the points
    orthogonal to it modulo q.
    """
    if not is_prime(q):
        raise FamilyError(f"unsupported plane order {q}: only prime orders are built")
    pts = projective_points(q)
    n = len(pts)
    edges = []
    for j, line in enumerate(pts):
        for i, p in enumerate(pts):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                edges.append((i, n + j))
    labels = [f"p{p}" for p in pts] + [f"L{l}" for l in pts]
    labels = [s.replace(" ", "") for s in labels]
    return Graph(2 * n, tuple(edges), tuple(labels))


def spider(legs: tuple[int, ...]) -> Graph:
    """Subdivided star: centre 0 with one path of each given length."""
    _require(len(legs) >= 1 and all(l >= 1 for l in legs), "spider legs must be >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, tuple(edges))


def tree_from_prufer(code: tuple[int, ...]) -> Graph:
    n = len(code) + 2
    _require(all(0 <= c < n for c in code), "Prüfer entries must be < len+2")
    degree = [1] * n
    for c in code:
        degree[c] += 1
    edges = []
    for c in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, c))
        degree[leaf] -= 1
        degree[c] -= 1
    u, v = [x for x in range(n) if degree[x] == 1]
    edges.append((u, v))
    return Graph(n, tuple(edges))


def prufer_code(t: Graph) -> tuple[int, ...]:
    adj = [set(a) for a in t.adjacency]
    code = []
    for _ in range(t.order - 2):
        leaf = min(v for v in range(t.order) if len(adj[v]) == 1)
        (parent,) = adj[leaf]
        code.append(parent)
        adj[parent].discard(leaf)
        adj[leaf].clear()
    return tuple(code)


def random_bipartite_radius3(order: int, seed: int) -> tuple[Graph, int]:
    """Connected bipartite graph of radius 3 by seeded rejection sampling.

    Returns the graph and the number of rejected draws.
    """
    _require(order >= 6, "radius-3 bipartite graphs need order >= 6")
    rng = random.Random(f"random-bipartite:{order}:{seed}")
    for attempt in range(20000):
        a = rng.randint(2, order - 2)
        p = rng.uniform(0.2, 0.6)
        edges = [(i, j) for i in range(a) for j in range(a, order) if rng.random() < p]
        g = Graph(order, tuple(edges))
        inv = structural_invariants(g)
        if inv.connected and inv.radius == 3:
            return g, attempt
    raise FamilyError(f"no radius-3 bipartite graph found for order {order}, seed {seed}")


# -- graph6 -------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.order
    _require(n <= 62, "graph6 encoding here supports order <= 62")
    bits = [1 if g.has_edge(i, j) else 0 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def from_graph6(code: str) -> Graph:
    if not code or not 63 <= ord(code[0]) <= 125:
        raise FamilyError(f"bad graph6 string {code!r}")
    n = ord(code[0]) - 63
    bits = []
    for ch in code[1:]:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise FamilyError(f"bad graph6 character {ch!r}")
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if len(bits) < len(pairs):
        raise FamilyError(f"graph6 string {code!r} is too short")
    return Graph(n, tuple(p for p, b in zip(pairs, bits) if b))


# -- named graphs -------------------------------------------------------------

FIGURE1_LABELS = ("A", "B", "C", "D", "E", "F", "G")
# 6-cycle A-B-E-F-D-C-A with the pendant G on F.
FIGURE1_EDGES = ((0, 1), (1, 4), (4, 5), (5, 3), (3, 2), (2, 0), (5, 6))

NAMED: dict[str, Graph] = {
    "figure1": Graph(7, FIGURE1_EDGES, FIGURE1_LABELS),
    "heawood": projective_plane(2),
}


# -- dispatch -----------------------------------------------------------------


def build_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    k, p = spec.kind, spec.params
    if k == "path":
        return path_graph(p[0])
    if k == "cycle":
        return cycle_graph(p[0])
    if k == "complete":
        return complete_graph(p[0])
    if k == "complete-bipartite":
        return complete_bipartite(p[0], p[1])
    if k == "star":
        return star_graph(p[0])
    if k == "empty":
        return empty_graph(p[0])
    if k == "pseudo-sphere":
        return pseudo_sphere(p[0])
    if k == "projective-plane":
        return projective_plane(p[0])
    if k == "spider":
        return spider(_dash_ints(p[0], "spider"))
    if k == "tree":
        return tree_from_prufer(() if p[0] in ("", "-") else _dash_ints(p[0], "tree"))
    if k == "random-bipartite":
        return random_bipartite_radius3(p[0], p[1])[0]
    if k == "graph6":
        return from_graph6(p[0])
    if k == "named":
        try:
            return NAMED[p[0].lower()]
        except KeyError:
            raise FamilyError(f"unknown named graph {p[0]!r}; known: {sorted(NAMED)}") from None
    if k == "file":
        try:
            return read_edge_list(p[0])
        except OSError as exc:
            raise FamilyError(f"cannot read {p[0]!r}: {exc.strerror}") from None
    if k == "corona":
        return corona(build_family(p[0]), build_family(p[1]))
    if k == "join":
        return join(build_family(p[0]), build_family(p[1]))
    if k == "union":
        return disjoint_union(build_family(p[0]), build_family(p[1]))
    raise FamilyError(f"unknown family kind {k!r}")


def _dash_ints(tok: str, kind: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in tok.split("-"))
    except ValueError:
        raise FamilyError(f"{kind}: expected dash-separated integers, got {tok!r}") from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def spec(text: str) -> FamilySpec:
    """Shorthand used by catalogs and tests."""
    return parse_family(text)


# -- exhaustive small-graph enumeration -----------------------------------------


def _canonical_code(n: int, edges: tuple[tuple[int, int], ...], perms) -> tuple:
    best = None
    for perm in perms:
        code = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs of order ``n``.

    Brute force over all edge subsets with a canonical form minimised over
    every vertex permutation, so only tiny orders are supported.
    """
    _require(1 <= n <= 5, "all_graphs supports 1 <= n <= 5")
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen: dict[tuple, Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        code = _canonical_code(n, edges, perms)
        if code not in seen:
            seen[code] = Graph(n, code)
    return tuple(sorted(seen.values(), key=lambda g: (g.size, g.edges)))


def all_connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if g.is_connected())


def _tree_canon(t: Graph) -> str:
    """AHU encoding rooted at the centre (minimised over both centres)."""
    from .graph import center

    def enc(v: int, parent: int) -> str:
        kids = sorted(enc(w, v) for w in t.adjacency[v] if w != parent)
        return "(" + "".join(kids) + ")"

    return min(enc(c, -1) for c in center(t))


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic trees of order ``n``, grown leaf by leaf."""
    _require(1 <= n <= 14, "all_trees supports 1 <= n <= 14")
    if n == 1:
        return (Graph(1),)
    found: dict[str, Graph] = {}
    for t in all_trees(n - 1):
        for v in range(t.order):
            g = Graph(n, t.edges + ((v, n - 1),))
            key = _tree_canon(g)
            if key not in found:
                found[key] = g
    return tuple(found[k] for k in sorted(found))
