"""Exact local metric generators, dimension and bases.

A set S is a local metric generator when every edge {x, y} has some s in S
with d(s, x) != d(s, y).  Writing D(x, y) for the set of vertices that
distinguish the edge, S is a generator iff it meets every D(x, y), so the
local metric dimension is a minimum hitting-set problem over those sets.

Two solvers are provided and must agree on value, witness and the full list
of bases:

* ``prune=False`` walks ``itertools.combinations`` by increasing size.
* ``prune=True`` (default) buckets vertices that distinguish exactly the same
  edges, keeps the lowest index of each bucket as its representative, and
  runs an include-first depth-first search over representatives with a
  disjoint-constraint lower bound.  Include-first search in vertex order
  visits sets in lexicographic order, so the first hit is the least basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError, InstanceTooLarge, LmdError
from .graph import Graph, join

DEFAULT_CAP = 32

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class DimensionResult:
    value: int
    witness: VertexSet
    all_bases: tuple[VertexSet, ...] | None = None
    method: str = "oracle"

    def as_dict(self) -> dict:
        out = {"value": self.value, "witness": list(self.witness), "method": self.method}
        if self.all_bases is not None:
            out["all_bases"] = [list(b) for b in self.all_bases]
        return out


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("undefined: graph must be connected")


def is_local_metric_generator(g: Graph, s: Iterable[int]) -> bool:
    _require_connected(g)
    s = sorted(set(s))
    if any(not 0 <= v < g.order for v in s):
        raise LmdError("vertex set is not a subset of the graph's vertices")
    d = g.distances
    for x, y in g.edges:
        if not any(d[v, x] != d[v, y] for v in s):
            return False
    return True


def distinguishing_masks(g: Graph) -> list[int]:
    """For each edge (in ``g.edges`` order) the bitmask of vertices distinguishing it."""
    d = g.distances
    masks = []
    for x, y in g.edges:
        rx, ry = d.row(x), d.row(y)
        masks.append(sum(1 << v for v in range(g.order) if rx[v] != ry[v]))
    return masks


def _check_instance(g: Graph, cap: int) -> None:
    if g.order > cap:
        raise InstanceTooLarge(
            f"instance too large for exact search: order {g.order} > cap {cap}"
        )
    if g.order < 2:
        raise LmdError("local metric dimension is undefined for the trivial graph")
    _require_connected(g)


def local_metric_dimension(
    g: Graph, enumerate_all: bool = False, cap: int = DEFAULT_CAP, prune: bool = True
) -> DimensionResult:
    _check_instance(g, cap)
    return _solve(g, enumerate_all, prune)


@lru_cache(maxsize=4096)
def _solve(g: Graph, enumerate_all: bool, prune: bool) -> DimensionResult:
    masks = distinguishing_masks(g)
    if prune:
        value, bases = _pruned_search(g.order, masks, enumerate_all)
    else:
        value, bases = _plain_search(g.order, masks, enumerate_all)
    return DimensionResult(
        value=value,
        witness=bases[0],
        all_bases=tuple(bases) if enumerate_all else None,
    )


def _plain_search(n: int, masks: list[int], enumerate_all: bool) -> tuple[int, list[VertexSet]]:
    for k in range(1, n + 1):
        found = []
        for combo in combinations(range(n), k):
            sel = 0
            for v in combo:
                sel |= 1 << v
            if all(m & sel for m in masks):
                found.append(combo)
                if not enumerate_all:
                    return k, found
        if found:
            return k, found
    raise AssertionError("the full vertex set always generates")


def _pruned_search(n: int, masks: list[int], enumerate_all: bool) -> tuple[int, list[VertexSet]]:
    # Bucket vertices by the set of edges they distinguish.
    buckets: dict[int, list[int]] = {}
    for v in range(n):
        profile = 0
        for e, m in enumerate(masks):
            if m >> v & 1:
                profile |= 1 << e
        buckets.setdefault(profile, []).append(v)
    members = {b[0]: b for b in buckets.values()}
    reps = sorted(members)
    rep_mask = sum(1 << v for v in reps)
    constraints = sorted({m & rep_mask for m in masks}, key=lambda m: (m.bit_count(), m))
    k, rep_sets = min_hitting_sets(reps, constraints, enumerate_all)
    if not enumerate_all:
        return k, rep_sets
    expanded = []
    for rs in rep_sets:
        for choice in product(*(members[r] for r in rs)):
            expanded.append(tuple(sorted(choice)))
    expanded.sort()
    return k, expanded


def min_hitting_sets(
    candidates: Sequence[int], constraints: Sequence[int], find_all: bool, start: int = 0
) -> tuple[int, list[VertexSet]]:
    """Minimum sets of candidates meeting every constraint bitmask.

    Sizes are tried in increasing order from ``max(start, lower bound)``;
    within a size, solutions come out in lexicographic order.  Returns the
    minimum size and either the least solution or all of them.
    """
    cands = sorted(candidates)
    cons = sorted(set(constraints), key=lambda m: (m.bit_count(), m))
    if any(c == 0 for c in cons):
        raise LmdError("a constraint cannot be met by any candidate")
    if not cons:
        return 0, [()]
    suffix = [0] * (len(cands) + 1)
    for i in range(len(cands) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << cands[i])
    k = max(start, _packing_bound(cons, suffix[0]), 1)
    while k <= len(cands):
        found = _search_size(cands, cons, suffix, k, find_all)
        if found:
            return k, found
        k += 1
    raise LmdError("constraints cannot all be met")


def _packing_bound(unmet: list[int], avail: int) -> int:
    """Number of pairwise-disjoint constraints, greedily, smallest first."""
    used = 0
    count = 0
    for c in unmet:
        c &= avail
        if not c & used:
            used |= c
            count += 1
    return count


def _search_size(
    cands: list[int], cons: list[int], suffix: list[int], k: int, find_all: bool
) -> list[VertexSet]:
    found: list[VertexSet] = []
    chosen: list[int] = []
    n = len(cands)

    def rec(i: int, unmet: list[int]) -> bool:
        if not unmet:
            # Minimality of k makes every hitting set of this size exactly k.
            found.append(tuple(chosen))
            return not find_all
        left = k - len(chosen)
        if left == 0 or i == n:
            return False
        avail = suffix[i]
        for c in unmet:
            if not c & avail:
                return False
        if _packing_bound(unmet, avail) > left:
            return False
        v = cands[i]
        bit = 1 << v
        chosen.append(v)
        stop = rec(i + 1, [c for c in unmet if not c & bit])
        chosen.pop()
        if stop:
            return True
        return rec(i + 1, unmet)

    rec(0, cons)
    return found


# -- apex membership ----------------------------------------------------------


@dataclass(frozen=True)
class ApexReport:
    dim_join: int
    apex_in_some: bool
    apex_in_all: bool
    bases: tuple[VertexSet, ...]
    apex: int


def apex_in_some_basis(h: Graph, cap: int = DEFAULT_CAP) -> ApexReport:
    """Enumerate every local metric basis of K1 + H (apex = last index)."""
    if h.size == 0:
        raise LmdError("apex membership needs a graph with at least one edge")
    if h.order > cap - 1:
        raise InstanceTooLarge(
            f"instance too large for exact search: K1+H has order {h.order + 1} > cap {cap}"
        )
    host = join(h, Graph(1))
    apex = h.order
    res = local_metric_dimension(host, enumerate_all=True, cap=cap)
    flags = [apex in b for b in res.all_bases]
    return ApexReport(
        dim_join=res.value,
        apex_in_some=any(flags),
        apex_in_all=all(flags),
        bases=res.all_bases,
        apex=apex,
    )
