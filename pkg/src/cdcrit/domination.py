"""Exact domination and connected domination by subset enumeration.

Subsets are enumerated size by size in lexicographic order, so the first
accepted set of the smallest feasible size is the lexicographically
smallest minimum set. The search prunes on domination (every still
undominated vertex must have a closed neighbour among the vertices that
can still be picked) and tests connectivity only on complete candidates.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from cdcrit import _backend
from cdcrit.errors import BudgetExceeded, NotConnected
from cdcrit.graph import Graph, VertexSet, from_mask, to_mask

DEFAULT_MAX_CANDIDATES = 10**8
DEFAULT_TREE_THRESHOLD = 10


@dataclass
class Budget:
    """Search limits. ``max_size=None`` means ``n``; ``time_s=None`` means no clock.

    The candidate counter is shared by every search that receives the same
    budget object, so one budget caps a whole verification chain.
    """

    max_size: int | None = None
    max_candidates: int = DEFAULT_MAX_CANDIDATES
    time_s: float | None = None
    used: int = 0
    started: float | None = None

    def _begin(self) -> None:
        if self.started is None:
            self.started = time.monotonic()

    def remaining(self) -> int:
        left = self.max_candidates - self.used
        if left <= 0:
            raise BudgetExceeded(f"candidate budget of {self.max_candidates} exhausted")
        return left

    def charge(self, visited: int, complete: bool) -> None:
        self.used += visited
        if not complete:
            raise BudgetExceeded(f"candidate budget of {self.max_candidates} exhausted")
        if self.time_s is not None and self.started is not None:
            if time.monotonic() - self.started > self.time_s:
                raise BudgetExceeded(f"time budget of {self.time_s}s exceeded")

    def size_cap(self, n: int) -> int:
        return n if self.max_size is None else min(n, self.max_size)


@dataclass(frozen=True)
class DominationCertificate:
    set: VertexSet
    is_dominating: bool
    induces_connected: bool
    size: int

    @property
    def is_cd_set(self) -> bool:
        return self.is_dominating and self.induces_connected


def check_set(g: Graph, s: Iterable[int]) -> DominationCertificate:
    vs = tuple(sorted(set(s)))
    mask = to_mask(vs)
    dominated = mask
    for v in vs:
        dominated |= g.masks[v]
    return DominationCertificate(
        set=vs,
        is_dominating=dominated == (1 << g.n) - 1,
        induces_connected=_backend.mask_is_connected(g.masks, mask),
        size=len(vs),
    )


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise NotConnected(f"{g} is not connected")


def _search(
    g: Graph,
    size: int,
    *,
    connected: bool,
    find_all: bool,
    hit: Iterable[int] = (),
    budget: Budget,
) -> list[VertexSet]:
    budget._begin()
    found, visited, complete = _backend.cds_search(
        g.masks, g.n, size, connected, find_all, to_mask(hit), budget.remaining()
    )
    budget.charge(visited, complete)
    return [from_mask(m) for m in found]


def cd_sets_of_size(
    g: Graph, size: int, *, hit: Iterable[int] = (), budget: Budget | None = None
) -> list[VertexSet]:
    """All CD-sets of exactly ``size`` vertices (meeting ``hit`` if given)."""
    return _search(g, size, connected=True, find_all=True, hit=hit, budget=budget or Budget())


def find_cd_set(
    g: Graph,
    max_size: int,
    *,
    hit: Iterable[int] = (),
    min_size: int = 1,
    budget: Budget | None = None,
) -> VertexSet | None:
    """Smallest CD-set of size in ``[min_size, max_size]``, or None."""
    budget = budget or Budget()
    hit = tuple(hit)
    for size in range(max(1, min_size), min(max_size, g.n) + 1):
        found = _search(g, size, connected=True, find_all=False, hit=hit, budget=budget)
        if found:
            return found[0]
    return None


def connected_domination_number(g: Graph, budget: Budget | None = None) -> tuple[int, VertexSet]:
    """``gamma_c(G)`` and the lexicographically smallest minimum CD-set."""
    _require_connected(g)
    budget = budget or Budget()
    cap = budget.size_cap(g.n)
    found = find_cd_set(g, cap, budget=budget)
    if found is None:
        raise BudgetExceeded(f"no CD-set of size <= {cap}")
    return len(found), found


def enumerate_min_cd_sets(g: Graph, budget: Budget | None = None) -> list[VertexSet]:
    budget = budget or Budget()
    gc, _ = connected_domination_number(g, budget)
    return cd_sets_of_size(g, gc, budget=budget)


def domination_number(g: Graph, budget: Budget | None = None) -> tuple[int, VertexSet]:
    if g.n < 1:
        raise ValueError("domination number of the empty graph is undefined")
    budget = budget or Budget()
    for size in range(1, budget.size_cap(g.n) + 1):
        found = _search(g, size, connected=False, find_all=False, budget=budget)
        if found:
            return size, found[0]
    raise BudgetExceeded(f"no dominating set of size <= {budget.size_cap(g.n)}")


def max_leaves_by_spanning_trees(g: Graph) -> int:
    """Maximum leaf count over all spanning trees, by exhaustive enumeration.

    Enumerates edge subsets with include/exclude branching and a union-find
    forest; prunes a branch once the vertices already forced internal
    (degree >= 2 in the partial forest) leave no room to beat the best tree.
    """
    _require_connected(g)
    n = g.n
    if n == 1:
        return 0
    edges = g.edges
    target = n - 1
    ceiling = 2 if n == 2 else n - 1
    best = 0
    comp = list(range(n))
    deg = [0] * n

    def rec(i: int, used: int, internal: int) -> None:
        nonlocal best
        if best == ceiling:
            return
        if used == target:
            best = max(best, sum(1 for d in deg if d == 1))
            return
        if len(edges) - i < target - used or n - internal <= best:
            return
        u, v = edges[i]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            relabel = [w for w in range(n) if comp[w] == cv]
            for w in relabel:
                comp[w] = cu
            deg[u] += 1
            deg[v] += 1
            rec(i + 1, used + 1, internal + (deg[u] == 2) + (deg[v] == 2))
            deg[u] -= 1
            deg[v] -= 1
            for w in relabel:
                comp[w] = cv
        rec(i + 1, used, internal)

    rec(0, 0, 0)
    return best


def max_leaf_number(
    g: Graph, threshold: int = DEFAULT_TREE_THRESHOLD, budget: Budget | None = None
) -> tuple[int, str]:
    """Max-leaf number with the method used.

    Up to ``threshold`` vertices spanning trees are enumerated; above it the
    value is ``n - gamma_c(G)``, which holds for connected graphs with
    ``n >= 3``.
    """
    _require_connected(g)
    if g.n < 2:
        raise ValueError("max-leaf number needs at least two vertices")
    if g.n <= threshold:
        return max_leaves_by_spanning_trees(g), "spanning-tree-enumeration"
    gc, _ = connected_domination_number(g, budget)
    return g.n - gc, "identity"
