"""Closed formulas, bounds and structural characterizations for dim_l(G ⊙ H).

Characterization predicates here only inspect the structure of H; none of
them calls the exhaustive solver, so comparing them with the solver is a
genuine cross-check.  The only oracle consumers are
``theorem3_corona_dimension`` (which reduces G ⊙ H to the much smaller
K1 + H), ``dimension_bounds`` (dim_l(H) for one bound) and
``diameter_two_equality``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import ceil

from .errors import (
    ClassificationError,
    DisconnectedGraphError,
    InconsistentBounds,
    InstanceTooLarge,
    LmdError,
    RuleNotApplicable,
)
from .families import FamilySpec, is_prime, parse_family, projective_points, pseudo_sphere
from .graph import (
    Graph,
    bipartition,
    components,
    dominates,
    is_isomorphic,
    join,
    neighborhood_shell,
    structural_invariants,
)
from .localmetric import DEFAULT_CAP, apex_in_some_basis, local_metric_dimension, min_hitting_sets


@dataclass(frozen=True)
class Prediction:
    """Exact value (lo == hi) or an interval, with the rule that produced it."""

    lo: int
    hi: int
    rule: str
    assumptions: tuple[str, ...] = ()

    @property
    def value(self) -> int | None:
        return self.lo if self.lo == self.hi else None

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def as_dict(self) -> dict:
        out: dict = {"rule": self.rule, "assumptions": list(self.assumptions)}
        if self.exact:
            out["value"] = self.lo
        else:
            out["interval"] = [self.lo, self.hi]
        return out

    def __str__(self) -> str:
        body = str(self.lo) if self.exact else f"[{self.lo}, {self.hi}]"
        return f"{body} ({self.rule})"


def _exact(value: int, rule: str, *assumptions: str) -> Prediction:
    return Prediction(value, value, rule, tuple(assumptions))


K1 = Graph(1)


# -- corona engine -----------------------------------------------------------


def theorem3_corona_dimension(
    g: Graph, h: Graph, cap: int = DEFAULT_CAP, shortcut: bool = True
) -> Prediction:
    """dim_l(G ⊙ H) from dim_l(K1 + H) and whether the apex lies in a basis.

    Edgeless H gives dim_l(G); otherwise n·d if the apex is in no minimum
    basis of K1 + H and n·(d-1) if it is in one.  With ``shortcut`` a
    connected H of radius >= 4 skips the basis enumeration (the apex is then
    never in a basis).
    """
    if g.order < 1 or h.order < 1:
        raise LmdError("corona needs non-empty vertex sets")
    if not g.is_connected():
        raise DisconnectedGraphError("undefined: G must be connected")
    n = g.order
    if n == 1:
        d = local_metric_dimension(join(K1, h), cap=cap).value
        return _exact(d, "Thm3(n=1)", "n=1: G⊙H is K1+H")
    if h.size == 0:
        d = local_metric_dimension(g, cap=cap).value
        return _exact(d, "EmptyH", "H has no edges")
    inv = structural_invariants(h)
    if shortcut and inv.connected and inv.radius >= 4:
        d = local_metric_dimension(join(h, K1), cap=cap).value
        return _exact(n * d, "Thm3(i)", "H non-empty", f"r(H)={inv.radius}>=4: apex in no basis")
    rep = apex_in_some_basis(h, cap=cap)
    if rep.apex_in_some:
        return _exact(
            n * (rep.dim_join - 1),
            "Thm3(ii)",
            "H non-empty",
            f"dim_l(K1+H)={rep.dim_join}",
            "apex in some basis",
        )
    return _exact(
        n * rep.dim_join,
        "Thm3(i)",
        "H non-empty",
        f"dim_l(K1+H)={rep.dim_join}",
        "apex in no basis",
    )


# -- closed forms -------------------------------------------------------------


def family_closed_form(n: int, family: FamilySpec | str) -> Prediction:
    if isinstance(family, str):
        family = parse_family(family)
    if n < 2:
        raise RuleNotApplicable("closed forms need a base graph of order n >= 2")
    k, p = family.kind, family.params
    if k == "complete" and p[0] >= 2:
        return _exact(n * (p[0] - 1), "Cor(i)", f"H=K_{p[0]}")
    if k == "complete-bipartite" and p[0] >= 1 and p[1] >= 1:
        return _exact(n, "Cor(ii)", f"H=K_{p[0]},{p[1]}")
    if k == "path" and p[0] >= 4:
        t = p[0]
        if t % 4 == 1:
            return _exact(n * (t // 4), "Cor(iii)", f"H=P_{t}", "t=1 mod 4")
        return _exact(n * ceil(t / 4), "Cor(iii)", f"H=P_{t}", "t!=1 mod 4")
    if k == "cycle" and p[0] >= 4:
        return _exact(n * ceil(p[0] / 4), "Cor(iv)", f"H=C_{p[0]}")
    raise RuleNotApplicable(f"no closed form for {family}; use theorem3_corona_dimension")


# -- bounds -----------------------------------------------------------------------


def dimension_bounds(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> Prediction:
    """Tightest interval from every bound whose premises hold."""
    if h.size == 0:
        raise RuleNotApplicable("bounds need H with at least one edge")
    if not g.is_connected() or g.order < 2:
        raise RuleNotApplicable("bounds need a connected G of order n >= 2")
    n, m = g.order, h.order
    bounds = [(n, n * (m - 1), "Cor-bound-orders")]
    inv = structural_invariants(h)
    if inv.connected:
        dh = local_metric_dimension(h, cap=cap).value
        bounds.append((n * dh, None, f"Cor-dimH(dim_l(H)={dh})"))
        if inv.radius >= 3:
            bounds.append((2 * n, None, f"Rem-2n(r(H)={inv.radius})"))
        if inv.bipartite and inv.radius == 3:
            bounds.append((None, n * delta_prime(h), "Thm-bip-r3"))
    lo = max(b[0] for b in bounds if b[0] is not None)
    hi = min(b[1] for b in bounds if b[1] is not None)
    if lo > hi:
        raise InconsistentBounds(f"empty interval [{lo}, {hi}] from {[b[2] for b in bounds]}")
    return Prediction(lo, hi, "+".join(b[2] for b in bounds), tuple(b[2] for b in bounds))


# -- extremal characterizations ------------------------------------------------------


def extremal_upper_characterization(h: Graph) -> bool:
    """H is K_{n'} or K_1 ∪ K_{n'-1} (the cases attaining n(n'-1))."""
    m = h.order
    if m < 2:
        raise RuleNotApplicable("needs H of order >= 2")
    if h.size == 0:
        return False
    if h.is_complete():
        return True
    degs = h.degrees()
    return (
        h.size == (m - 1) * (m - 2) // 2
        and degs.count(0) == 1
        and degs.count(m - 2) == m - 1
    )


def lower_extreme_characterization(h: Graph) -> bool:
    """Bipartite with a single non-trivial component of radius <= 2."""
    if h.size == 0:
        raise RuleNotApplicable("needs H with at least one edge")
    if bipartition(h) is None:
        return False
    big = [c for c in components(h) if len(c) > 1]
    if len(big) != 1:
        return False
    return structural_invariants(h.induced(big[0])).radius <= 2


def diameter_two_equality(h: Graph, cap: int = DEFAULT_CAP) -> int | None:
    """Per-vertex multiplier dim_l(H) when H has diameter two, else None."""
    inv = structural_invariants(h)
    if not inv.connected or inv.diameter != 2:
        return None
    return local_metric_dimension(h, cap=cap).value


# -- beta / delta' ----------------------------------------------------------------


def beta_witness(h: Graph, x: int) -> tuple[int, tuple[int, ...]]:
    """Least A ⊆ N(x) dominating the distance-2 shell of the central vertex x."""
    inv = structural_invariants(h)
    if not inv.connected:
        raise DisconnectedGraphError("undefined: graph must be connected")
    if inv.radius < 2:
        raise RuleNotApplicable("β needs radius >= 2")
    if x not in inv.center:
        raise RuleNotApplicable("β defined only on center vertices")
    nbrs = sorted(h.neighbors(x))
    shell2 = neighborhood_shell(h, x, 2)
    for k in range(len(nbrs) + 1):
        for a in combinations(nbrs, k):
            if dominates(h, a, shell2):
                return k, a
    raise AssertionError("N(x) always dominates the distance-2 shell")


def beta(h: Graph, x: int) -> int:
    return beta_witness(h, x)[0]


def beta_profile(h: Graph) -> dict[int, int]:
    inv = structural_invariants(h)
    if not inv.connected:
        raise DisconnectedGraphError("undefined: graph must be connected")
    return {x: beta(h, x) for x in inv.center}


def delta_prime(h: Graph) -> int:
    return min(beta_profile(h).values())


def _require_bipartite_radius3(h: Graph):
    inv = structural_invariants(h)
    if not (inv.connected and inv.bipartite and inv.radius == 3):
        raise RuleNotApplicable("rule not applicable: needs a bipartite graph of radius 3")
    return inv


def bipartite_radius3_upper(h: Graph, n: int) -> Prediction:
    _require_bipartite_radius3(h)
    if n < 2:
        raise RuleNotApplicable("rule not applicable: needs n >= 2")
    dp = delta_prime(h)
    return Prediction(2 * n, n * dp, "Thm-bip-r3", ("H bipartite", "r(H)=3", f"δ'(H)={dp}"))


# -- girth-six diameter-three bipartite graphs ------------------------------------------


def pseudo_sphere_order(h: Graph) -> int | None:
    """t if H is the near pencil S_t, else None.

    Degree signature first (two poles of degree t-1, all others degree 2),
    confirmed by an exact isomorphism test up to order 16.
    """
    if h.order % 2 or h.order < 6:
        return None
    t = h.order // 2
    if h.size != 3 * (t - 1):
        return None
    degs = sorted(h.degrees())
    if degs != sorted([t - 1, t - 1] + [2] * (2 * t - 2)):
        return None
    if h.order <= 16 and not is_isomorphic(h, pseudo_sphere(t)):
        return None
    return t


def projective_like_exact(h: Graph, n: int) -> Prediction | None:
    if n < 2:
        raise RuleNotApplicable("rule not applicable: needs n >= 2")
    inv = structural_invariants(h)
    if not (inv.connected and inv.bipartite and inv.diameter == 3 and inv.girth == 6):
        return None
    t = pseudo_sphere_order(h)
    if t is not None:
        return _exact(2 * n, "PseudoSphere", "bipartite", "D(H)=3", "girth 6", f"H≅S_{t}")
    if h.is_regular():
        deg = h.degree(0)
        return _exact(n * deg, "ProjectivePlane", "bipartite", "D(H)=3", "girth 6", f"{deg}-regular")
    raise ClassificationError("outside (P1)/(P2) classification: neither near pencil nor regular")


@dataclass(frozen=True)
class UpsilonResult:
    q: int
    value: int
    optima: tuple[tuple[int, ...], ...]
    all_pencil_or_range: bool
    delta_prime: int
    degree: int
    stated_value: int

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "value": self.value,
            "optima": len(self.optima),
            "all_pencil_or_range": self.all_pencil_or_range,
            "delta_prime": self.delta_prime,
            "degree": self.degree,
            "stated_value": self.stated_value,
        }


def upsilon_plane(q: int, max_q: int = 5) -> UpsilonResult:
    """Smallest point/line set covering every incident pair of PG(2, q).

    An incident pair (p0, l0) is covered by a chosen point on l0 or a chosen
    line through p0.  Points are elements ``0..N-1`` and lines ``N..2N-1``,
    matching the indexing of the incidence graph.  ``stated_value`` is the
    closed form q that is sometimes quoted; ``degree`` is q+1.
    """
    if not is_prime(q):
        raise LmdError(f"unsupported plane order {q}")
    if q > max_q:
        raise InstanceTooLarge(f"q={q} too large for exhaustive search (max {max_q})")
    from .families import projective_plane

    pts = projective_points(q)
    N = len(pts)
    on_line = [
        [i for i, p in enumerate(pts) if sum(a * b for a, b in zip(p, line)) % q == 0]
        for line in pts
    ]
    through = [[j for j in range(N) if i in on_line[j]] for i in range(N)]
    constraints = []
    for j in range(N):
        for i in on_line[j]:
            mask = sum(1 << p for p in on_line[j]) | sum(1 << (N + l) for l in through[i])
            constraints.append(mask)
    value, optima = min_hitting_sets(range(2 * N), constraints, find_all=True)

    def pencil_or_range(sol: tuple[int, ...]) -> bool:
        s = set(sol)
        if all(x < N for x in s):
            return any(s == set(on_line[j]) for j in range(N))
        if all(x >= N for x in s):
            return any(s == {N + l for l in through[i]} for i in range(N))
        return False

    return UpsilonResult(
        q=q,
        value=value,
        optima=tuple(optima),
        all_pencil_or_range=all(pencil_or_range(s) for s in optima),
        delta_prime=delta_prime(projective_plane(q)),
        degree=q + 1,
        stated_value=q,
    )


# -- 2n characterizations ----------------------------------------------------------------


def _classes(h: Graph):
    inv = _require_bipartite_radius3(h)
    u1, u2 = inv.bipartition
    return sorted(u1), sorted(u2), frozenset(u1), frozenset(u2)


def dim2_join_characterization(h: Graph) -> bool:
    """dim_l(K1 + H) = 2 for a bipartite H of radius 3, decided structurally.

    (i) two vertices of one class whose neighbourhoods partition the other
    class, or (ii) a in U1, b in U2 with y ∈ N(a) or x ∈ N(b) for every edge
    xy (x ∈ U1, y ∈ U2).
    """
    l1, l2, s1, s2 = _classes(h)
    adj = h.adjacency
    for side, other in ((l1, s2), (l2, s1)):
        for a, b in combinations(side, 2):
            if not adj[a] & adj[b] and adj[a] | adj[b] == other:
                return True
    oriented = [(x, y) if x in s1 else (y, x) for x, y in h.edges]
    for a in l1:
        for b in l2:
            if all(y in adj[a] or x in adj[b] for x, y in oriented):
                return True
    return False


def two_n_characterization(h: Graph) -> bool:
    """dim_l(G ⊙ H) = 2n for bipartite H of radius 3, decided structurally."""
    l1, l2, s1, s2 = _classes(h)
    if dim2_join_characterization(h):
        return True
    adj = h.adjacency
    for side, other in ((l1, s2), (l2, s1)):
        for a, b in combinations_with_replacement(side, 2):
            if adj[a] | adj[b] == other:
                return True
    return False


def near_universal_vertex(h: Graph) -> bool:
    """Some a in one class is adjacent to all but one vertex of the other class."""
    l1, l2, s1, s2 = _classes(h)
    return any(h.degree(a) == len(s2) - 1 for a in l1) or any(
        h.degree(b) == len(s1) - 1 for b in l2
    )


# -- trees of radius three -----------------------------------------------------------------


@dataclass(frozen=True)
class TreeProfile:
    center: tuple[int, ...]
    radius: int
    heights: dict[int, int] = field(hash=False)
    sigma_set: tuple[int, ...]
    varsigma: int
    phi: dict[int, int] = field(hash=False)

    def as_dict(self) -> dict:
        return {
            "center": list(self.center),
            "radius": self.radius,
            "heights": {str(k): v for k, v in self.heights.items()},
            "sigma_set": list(self.sigma_set),
            "varsigma": self.varsigma,
            "phi": {str(k): v for k, v in self.phi.items()},
        }


def _tree_radius3(t: Graph):
    inv = structural_invariants(t)
    if not (inv.connected and t.size == t.order - 1):
        raise RuleNotApplicable("rule not applicable: not a tree")
    if inv.radius != 3:
        raise RuleNotApplicable(f"rule not applicable: tree radius is {inv.radius}, not 3")
    return inv


def tree_profile(t: Graph) -> TreeProfile | None:
    """Branch decomposition at the unique centre; None for bicentral trees."""
    inv = _tree_radius3(t)
    if len(inv.center) != 1:
        return None
    (u,) = inv.center
    heights, phi = {}, {}
    for w in sorted(t.neighbors(u)):
        depth = {w: 0}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in t.neighbors(x):
                if y != u and y not in depth:
                    depth[y] = depth[x] + 1
                    queue.append(y)
        heights[w] = max(depth.values())
        phi[w] = sum(1 for z in t.neighbors(w) if z != u and t.degree(z) >= 2)
    sigma = tuple(w for w in heights if heights[w] == 2)
    return TreeProfile((u,), inv.radius, heights, sigma, len(sigma), phi)


def tree_corona_dimension(t: Graph, n: int) -> Prediction:
    if n < 2:
        raise RuleNotApplicable("rule not applicable: needs n >= 2")
    inv = _tree_radius3(t)
    if len(inv.center) == 2:
        return _exact(2 * n, "Tree(i)", "tree", "r(T)=3", "|C(T)|=2")
    prof = tree_profile(t)
    notes = ["tree", "r(T)=3", "|C(T)|=1", f"ς(T)={prof.varsigma}"]
    if any(hw == 0 for hw in prof.heights.values()):
        notes.append("centre has leaf neighbours")
    if any(hw == 1 for hw in prof.heights.values()):
        return _exact(n * (prof.varsigma + 1), "Tree(ii)-h1", *notes, "some h_w=1")
    return _exact(n * prof.varsigma, "Tree(ii)-other", *notes, "no h_w=1")
