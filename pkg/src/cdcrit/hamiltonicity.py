"""Hamiltonian paths: exact search, verification, constructive builders and
non-traceability witnesses.

A witness is a vertex set ``S`` with ``omega(G - S) > |S| + 1``; any
traceable graph satisfies ``omega(G - S) <= |S| + 1``, so a witness proves
that no Hamiltonian path exists.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from cdcrit import _backend
from cdcrit.errors import CdcritError, InvalidWitness, SizeLimit, UnsupportedFamily
from cdcrit.families import FamilyTag, b1_from_tag
from cdcrit.graph import Graph, VertexSet, component_count

DEFAULT_MAX_N = 24


def default_max_n() -> int:
    return int(os.environ.get("CDCRIT_MAX_N", DEFAULT_MAX_N))


@dataclass(frozen=True)
class PathCertificate:
    sequence: tuple[int, ...]

    def format(self) -> str:
        return " ".join(map(str, self.sequence))

    @classmethod
    def parse(cls, text: str) -> PathCertificate:
        return cls(tuple(int(tok) for tok in text.split()))


@dataclass(frozen=True)
class NonTraceabilityWitness:
    cut_set: VertexSet
    component_count: int

    def format(self) -> str:
        return f"S=[{','.join(map(str, self.cut_set))}] omega={self.component_count}"

    @classmethod
    def parse(cls, text: str) -> NonTraceabilityWitness:
        fields = dict(tok.split("=", 1) for tok in text.split())
        inner = fields["S"].strip("[]")
        return cls(tuple(int(v) for v in inner.split(",") if v), int(fields["omega"]))


@dataclass(frozen=True)
class PathVerdict:
    valid: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def hamiltonian_path_exact(g: Graph, max_n: int | None = None) -> PathCertificate | None:
    """Bitmask DP over (visited set, endpoint).

    The certificate is reconstructed from the smallest feasible endpoint,
    always stepping back to the smallest feasible predecessor.
    """
    limit = default_max_n() if max_n is None else max_n
    if g.n > limit:
        raise SizeLimit(f"{g.n} vertices exceeds the exact-solver cap of {limit}")
    seq = _backend.hamiltonian_path(g.masks, g.n)
    return None if seq is None else PathCertificate(tuple(seq))


def verify_path(g: Graph, seq: Sequence[int]) -> PathVerdict:
    seq = list(seq)
    if len(seq) != g.n:
        return PathVerdict(False, None, f"length {len(seq)} != {g.n} vertices")
    seen = set()
    for i, v in enumerate(seq):
        if not 0 <= v < g.n:
            return PathVerdict(False, i, f"vertex {v} out of range")
        if v in seen:
            return PathVerdict(False, i, f"vertex {v} repeated")
        seen.add(v)
    for i in range(len(seq) - 1):
        if not g.has_edge(seq[i], seq[i + 1]):
            return PathVerdict(False, i, f"{seq[i]} and {seq[i + 1]} are not adjacent")
    return PathVerdict(True)


def verify_nontraceability_witness(g: Graph, s: Iterable[int]) -> tuple[bool, int]:
    cut = set(s)
    if not cut or len(cut) >= g.n or not cut <= set(range(g.n)):
        raise InvalidWitness("witness must be a non-empty proper vertex subset")
    omega = component_count(g, cut)
    return omega > len(cut) + 1, omega


# -- constructive builders --------------------------------------------------


def _b1_path(g: Graph, tag: FamilyTag) -> list[int]:
    """Hamiltonian path of the embedded B1 block starting at its head.

    Takes the lexicographically smallest edge ``uv`` with ``u`` a leaf and
    ``v`` a centre, walks the leaves ending at ``u``, crosses to ``v`` and
    walks the centres and isolated vertices.
    """
    b, centres, leaf_groups, isolated = b1_from_tag(tag)
    leaves = sorted(v for grp in leaf_groups for v in grp)
    u, v = min((u, v) for u in leaves for v in centres if g.has_edge(u, v))
    rest = sorted(set(centres) | set(isolated))
    return [b] + [w for w in leaves if w != u] + [u, v] + [w for w in rest if w != v]


def constructive_hamiltonian_path(g: Graph, tag: FamilyTag) -> PathCertificate:
    if tag.family == "B1":
        seq = _b1_path(g, tag)
    elif tag.family == "Uk":
        seq = list(tag.role("c")) + _b1_path(g, tag)
    elif tag.family == "G1":
        # c_0..c_{ell-1}, the clique, c_ell..c_{k-4}, then the head; with
        # ell = k-3 the tail of the path is empty and the clique meets b directly
        c, q, ell = list(tag.role("c")), list(tag.role("Q")), int(tag.params["ell"])
        seq = c[:ell] + q + c[ell:]
        seq += _b1_path(g, tag)
    else:
        raise UnsupportedFamily(f"no constructive path for family {tag.family}")
    verdict = verify_path(g, seq)
    if not verdict:
        raise CdcritError(f"constructed sequence is not a Hamiltonian path: {verdict.reason}")
    return PathCertificate(tuple(seq))


# -- witnesses ----------------------------------------------------------------


def structural_cut_set(tag: FamilyTag) -> VertexSet | None:
    """``{x} + B1 + B2`` for tags that embed the N(s) construction."""
    if tag.family == "Ns" or (tag.family == "Pkl" and tag.params.get("base") == "Ns"):
        return tuple(sorted(tag.role("x") + tag.role("B1") + tag.role("B2")))
    return None


def witness_search(
    g: Graph, tag: FamilyTag | None = None, size_bound: int | None = None
) -> NonTraceabilityWitness | None:
    """First witness in canonical order (by size, then lexicographic).

    A size layer is skipped when even the highest-degree vertices cannot
    split the graph enough: removing ``v`` raises the component count by at
    most ``deg(v) - 1``.
    """
    if tag is not None:
        s = structural_cut_set(tag)
        if s is not None and 0 < len(s) < g.n:
            ok, omega = verify_nontraceability_witness(g, s)
            if ok:
                return NonTraceabilityWitness(s, omega)
    bound = g.n - 1 if size_bound is None else min(size_bound, g.n - 1)
    base = component_count(g)
    gains = sorted((max(d - 1, 0) for d in g.degrees()), reverse=True)
    for size in range(1, bound + 1):
        if g.n - size <= size + 1:
            break
        if base + sum(gains[:size]) <= size + 1:
            continue
        for cut in itertools.combinations(range(g.n), size):
            omega = component_count(g, cut)
            if omega > size + 1:
                return NonTraceabilityWitness(cut, omega)
    return None
