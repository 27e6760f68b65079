"""Criticality decisions, structural lemma audits and class-membership checks.

Audits never raise on a failed property; they return violation lists so a
verification run can report every counterexample it meets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from cdcrit.domination import (
    Budget,
    cd_sets_of_size,
    connected_domination_number,
    enumerate_min_cd_sets,
    find_cd_set,
)
from cdcrit.errors import NotConnected
from cdcrit.graph import Graph, VertexSet, components, cut_vertices, to_mask

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairResult:
    u: int
    v: int
    gamma_c_after: int
    min_cd_sets_after: tuple[VertexSet, ...] = ()


@dataclass(frozen=True)
class CriticalityReport:
    gamma_c: int
    is_critical: bool
    k: int | None
    pairs: tuple[PairResult, ...]
    zeta: int

    def failing_pairs(self) -> list[Pair]:
        return [(p.u, p.v) for p in self.pairs if p.gamma_c_after >= self.gamma_c]


@dataclass(frozen=True)
class Violation:
    detail: str
    pair: Pair | None = None
    vertex: int | None = None
    set: VertexSet = ()


@dataclass(frozen=True)
class LemmaAudit:
    lemma_id: str
    violations: tuple[Violation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations


def _check_connected(g: Graph) -> None:
    if not g.is_connected():
        raise NotConnected(f"{g} is not connected")


def criticality_report(
    g: Graph, *, with_sets: bool = True, budget: Budget | None = None
) -> CriticalityReport:
    """Exact ``gamma_c`` of ``G`` and of ``G + uv`` for every non-adjacent pair.

    Each ``G + uv`` is searched only up to size ``gamma_c(G) - 1``; if
    nothing is found its value is ``gamma_c(G)`` since adding an edge never
    destroys a CD-set. ``with_sets`` also enumerates every minimum CD-set of
    each augmented graph.
    """
    _check_connected(g)
    if g.n < 2:
        raise ValueError("criticality needs at least two vertices")
    budget = budget or Budget()
    gc, _ = connected_domination_number(g, budget)
    pairs = []
    for u, v in g.non_edges():
        h = g.add_edge(u, v)
        found = find_cd_set(h, gc - 1, budget=budget)
        after = gc if found is None else len(found)
        sets: tuple[VertexSet, ...] = ()
        if with_sets:
            sets = tuple(cd_sets_of_size(h, after, budget=budget))
        pairs.append(PairResult(u, v, after, sets))
    critical = all(p.gamma_c_after < gc for p in pairs)
    return CriticalityReport(
        gamma_c=gc,
        is_critical=critical,
        k=gc if critical else None,
        pairs=tuple(pairs),
        zeta=len(cut_vertices(g)),
    )


def is_k_critical(g: Graph, k: int, budget: Budget | None = None) -> tuple[bool, Pair | None]:
    """Decide ``k``-criticality; on failure returns the first offending pair.

    The offending pair is ``None`` when ``gamma_c(G) != k``.
    """
    budget = budget or Budget()
    gc, _ = connected_domination_number(g, budget)
    if gc != k:
        return False, None
    for u, v in g.non_edges():
        if find_cd_set(g.add_edge(u, v), k - 1, budget=budget) is None:
            return False, (u, v)
    return True, None


def lemma1_audit(
    g: Graph, k: int, report: CriticalityReport | None = None, budget: Budget | None = None
) -> list[LemmaAudit]:
    """Audit the size, hitting and neighbourhood properties of every ``gamma_c``-set of ``G + xy``."""
    if report is None or any(not p.min_cd_sets_after for p in report.pairs):
        report = criticality_report(g, with_sets=True, budget=budget)
    size_v, hit_v, nbr_v = [], [], []
    for p in report.pairs:
        x, y = p.u, p.v
        for d in p.min_cd_sets_after:
            ds = set(d)
            if not k - 2 <= len(d) <= k - 1:
                size_v.append(Violation(f"|D|={len(d)} outside [{k - 2}, {k - 1}]", (x, y), set=d))
            if not ds & {x, y}:
                hit_v.append(Violation("D misses both endpoints", (x, y), set=d))
            for inside, outside in ((x, y), (y, x)):
                if inside in ds and outside not in ds:
                    clash = sorted(ds.intersection(g.adj[outside]))
                    if clash:
                        nbr_v.append(
                            Violation(
                                f"D contains {inside} only, yet neighbours {clash} of {outside}",
                                (x, y),
                                set=d,
                            )
                        )
    return [
        LemmaAudit("L1a", tuple(size_v)),
        LemmaAudit("L1b", tuple(hit_v)),
        LemmaAudit("L1c", tuple(nbr_v)),
    ]


def _is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def lemma2_audit(
    g: Graph, min_sets: list[VertexSet] | None = None, budget: Budget | None = None
) -> list[LemmaAudit]:
    """Audit every cut-vertex: two components, clique neighbourhoods, membership in CD-sets.

    The membership check runs over all minimum CD-sets and also confirms the
    structural reason it extends to every CD-set: no component of ``G - c``
    dominates the rest of the graph, so a connected set avoiding ``c`` (which
    lies inside one component) cannot dominate.
    """
    _check_connected(g)
    cuts = cut_vertices(g)
    two_v, clique_v, member_v = [], [], []
    if cuts and min_sets is None:
        min_sets = enumerate_min_cd_sets(g, budget)
    full = (1 << g.n) - 1
    for c in cuts:
        comps = components(g, {c})
        if len(comps) != 2:
            two_v.append(Violation(f"G - {c} has {len(comps)} components", vertex=c))
        for comp in comps:
            nbrs = tuple(sorted(set(comp).intersection(g.adj[c])))
            if not _is_clique(g, nbrs):
                clique_v.append(Violation(f"N({c}) within component is not complete", vertex=c, set=nbrs))
        for d in min_sets or ():
            if c not in d:
                member_v.append(Violation(f"minimum CD-set avoids cut-vertex {c}", vertex=c, set=d))
        for comp in comps:
            closed = to_mask(comp)
            for v in comp:
                closed |= g.masks[v]
            if closed == full:
                member_v.append(
                    Violation(f"component of G - {c} dominates G", vertex=c, set=comp)
                )
    return [
        LemmaAudit("L2a", tuple(two_v)),
        LemmaAudit("L2b", tuple(clique_v)),
        LemmaAudit("L2c", tuple(member_v)),
    ]


@dataclass
class ClassReport:
    verdict: bool
    reasons: list[str] = field(default_factory=list)
    vertex_witnesses: dict[int, VertexSet] = field(default_factory=dict)
    pair_witnesses: dict[Pair, VertexSet] = field(default_factory=dict)


def _maximal_clique_problems(g: Graph, h: VertexSet) -> list[str]:
    problems = []
    if len(h) < 2:
        problems.append("H has fewer than two vertices")
    if not _is_clique(g, h):
        problems.append("H is not complete")
    hm = to_mask(h)
    for v in range(g.n):
        if not hm >> v & 1 and g.masks[v] & hm == hm:
            problems.append(f"H is not maximal: vertex {v} is adjacent to all of H")
            break
    return problems


def check_class_P(g: Graph, h: Iterable[int], k: int, budget: Budget | None = None) -> ClassReport:
    """Membership of ``G`` in the property class with designated clique ``H``.

    Property (a): every vertex lies in a ``gamma_c``-set meeting ``H``.
    Property (b): every ``G + xy`` has a CD-set of size ``< k`` meeting ``H``.
    Failed preconditions are reported in the verdict, never raised.
    """
    budget = budget or Budget()
    h = tuple(sorted(set(h)))
    report = ClassReport(True)
    if any(not 0 <= v < g.n for v in h):
        report.verdict = False
        report.reasons.append("H is not a vertex subset of G")
        return report
    report.reasons.extend(_maximal_clique_problems(g, h))
    if not g.is_connected():
        report.reasons.append("G is not connected")
    else:
        critical, bad = is_k_critical(g, k, budget)
        if not critical:
            report.reasons.append(
                f"G is not {k}-critical" + (f" (pair {bad} keeps gamma_c)" if bad else "")
            )
    if report.reasons:
        report.verdict = False
        return report

    for d in cd_sets_of_size(g, k, hit=h, budget=budget):
        for v in d:
            report.vertex_witnesses.setdefault(v, d)
    missing = [v for v in range(g.n) if v not in report.vertex_witnesses]
    if missing:
        report.reasons.append(f"(a) fails for vertices {missing}")
    for x, y in g.non_edges():
        d = find_cd_set(g.add_edge(x, y), k - 1, hit=h, budget=budget)
        if d is None:
            report.reasons.append(f"(b) fails for pair {(x, y)}")
        else:
            report.pair_witnesses[(x, y)] = d
    report.verdict = not report.reasons
    return report


def check_class_B2(h: Graph, b: int, budget: Budget | None = None) -> ClassReport:
    """Membership of the block ``H`` with head ``b`` in the end-block class.

    Checks: ``H`` is a single block; ``gamma_c(H) = 3``; ``N_H(b)`` is
    complete; every ``v != b`` lies in a ``gamma_c``-set; every non-adjacent
    pair ``x, y`` of ``H - b`` admits a CD-set of ``H + xy`` of size 2 that
    contains a neighbour of ``b`` and one of ``x, y``.
    """
    budget = budget or Budget()
    report = ClassReport(True)
    if not 0 <= b < h.n:
        return ClassReport(False, [f"head {b} is not a vertex of H"])
    if h.n < 2 or not h.is_connected():
        return ClassReport(False, ["H is not connected"])
    if cut_vertices(h):
        report.reasons.append(f"H is not a block: cut-vertices {list(cut_vertices(h))}")
    gc, _ = connected_domination_number(h, budget)
    if gc != 3:
        report.reasons.append(f"gamma_c(H) = {gc} != 3")
    if not _is_clique(h, h.adj[b]):
        report.reasons.append(f"N_H({b}) is not complete")
    if report.reasons:
        report.verdict = False
        return report
    for d in cd_sets_of_size(h, 3, budget=budget):
        for v in d:
            report.vertex_witnesses.setdefault(v, d)
    missing = [v for v in range(h.n) if v != b and v not in report.vertex_witnesses]
    if missing:
        report.reasons.append(f"(b) fails for vertices {missing}")
    nb = to_mask(h.adj[b])
    for x, y in h.non_edges():
        if b in (x, y):
            continue
        good = [
            d
            for d in cd_sets_of_size(h.add_edge(x, y), 2, budget=budget)
            if to_mask(d) & nb and set(d) & {x, y}
        ]
        if good:
            report.pair_witnesses[(x, y)] = good[0]
        else:
            report.reasons.append(f"(c) fails for pair {(x, y)}")
    report.verdict = not report.reasons
    return report
