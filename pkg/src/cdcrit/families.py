"""Generators for the connected-domination-critical graph families.

Every generator returns ``(graph, tag)``. The tag records the family, its
parameters and a role for every vertex (the roles partition the vertex
set); designated subsets that are not part of the partition, such as the
clique ``H`` that later constructions attach to, live in ``tag.anchors``.

Vertex labelling is fixed per family:

* ``B1``: head ``b = 0``; star centres ``1..m``; then the leaves of star 1,
  star 2, ...; then the isolated vertices ``S''``.
* ``Uk``: the ``B1`` block keeps its labels; path ``c_0..c_{k-3}`` follows.
* ``G1``: ``B1`` block; path ``c_0..c_{k-4}``; then the clique ``Q``.
* ``G2``: the block ``H`` keeps its labels; path ``c_0..c_{k-4}`` follows.
* ``Ns``: ``x = 0``; ``a_1..a_s = 1..s``; ``b_1..b_s = s+1..2s``; then
  ``z_{i,j}`` for ``i < j`` in lexicographic order.
* ``Pkl``: the base graph keeps its labels; then ``x_0``; then the cliques
  ``G_1..G_l`` in order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from cdcrit.criticality import check_class_B2
from cdcrit.errors import InvalidParams, NotB2Member, ParseError
from cdcrit.graph import Graph, VertexSet, build_graph, complement

FAMILIES = ("B1", "Uk", "G1", "G2", "Ns", "Pkl")

Param = int | str | tuple[int, ...]


@dataclass(frozen=True)
class FamilyTag:
    family: str
    params: dict[str, Param] = field(default_factory=dict)
    roles: dict[str, VertexSet] = field(default_factory=dict)
    anchors: dict[str, VertexSet] = field(default_factory=dict)

    def role(self, name: str) -> VertexSet:
        return self.roles[name]

    def vertex(self, name: str) -> int:
        (v,) = self.roles[name]
        return v

    def grouped(self, prefix: str) -> list[VertexSet]:
        """Roles named ``prefix.1``, ``prefix.2``, ... in index order."""
        out = []
        i = 1
        while f"{prefix}.{i}" in self.roles:
            out.append(self.roles[f"{prefix}.{i}"])
            i += 1
        return out

    def validate(self, g: Graph) -> list[str]:
        """Problems with this tag against ``g``; empty when the roles partition V(G)."""
        problems = []
        seen: dict[int, str] = {}
        for name, vs in self.roles.items():
            for v in vs:
                if not 0 <= v < g.n:
                    problems.append(f"role {name}: vertex {v} out of range")
                elif v in seen:
                    problems.append(f"vertex {v} in roles {seen[v]} and {name}")
                else:
                    seen[v] = name
        missing = sorted(set(range(g.n)) - set(seen))
        if missing:
            problems.append(f"vertices without a role: {missing}")
        for name, vs in self.anchors.items():
            bad = [v for v in vs if not 0 <= v < g.n]
            if bad:
                problems.append(f"anchor {name}: vertices {bad} out of range")
        return problems


# -- generators -------------------------------------------------------------


def build_B1(star_sizes: Sequence[int], isolated: int = 0) -> tuple[Graph, FamilyTag]:
    """Complement of a star forest plus isolated vertices, with a head joined to the leaves."""
    star_sizes = tuple(int(x) for x in star_sizes)
    if len(star_sizes) < 2:
        raise InvalidParams("B1 needs at least two stars")
    if any(x < 1 for x in star_sizes):
        raise InvalidParams("every star needs at least one leaf")
    if isolated < 0:
        raise InvalidParams("isolated vertex count must be non-negative")
    m = len(star_sizes)
    centres = tuple(range(1, m + 1))
    nxt = m + 1
    leaves = []
    for size in star_sizes:
        leaves.append(tuple(range(nxt, nxt + size)))
        nxt += size
    iso = tuple(range(nxt, nxt + isolated))
    n = nxt + isolated

    # the star forest T lives on vertices 1..n-1; its complement is relabelled back below
    forest = [(c - 1, leaf - 1) for c, ls in zip(centres, leaves) for leaf in ls]
    body = complement(build_graph(n - 1, forest))
    edges = [(u + 1, v + 1) for u, v in body.edges]
    edges.extend((0, leaf) for ls in leaves for leaf in ls)
    roles: dict[str, VertexSet] = {"b": (0,), "S": centres}
    for i, ls in enumerate(leaves, 1):
        roles[f"S'.{i}"] = ls
    roles["S''"] = iso
    tag = FamilyTag("B1", {"stars": star_sizes, "isolated": isolated}, roles)
    return build_graph(n, edges), tag


def build_Uk(
    k: int,
    star_sizes: Sequence[int],
    isolated: int = 0,
    *,
    allow_degenerate: bool = False,
) -> tuple[Graph, FamilyTag]:
    """A ``B1`` block with a pendant path ``c_0..c_{k-3}`` attached at the head."""
    lowest = 2 if allow_degenerate else 4
    if k < lowest:
        raise InvalidParams(f"U(k) needs k >= {lowest}, got {k}")
    block, btag = build_B1(star_sizes, isolated)
    nb = block.n
    path = tuple(range(nb, nb + k - 2))
    edges = list(block.edges)
    edges.extend(zip(path, path[1:]))
    if path:
        edges.append((path[-1], btag.vertex("b")))
    roles = dict(btag.roles)
    roles["c"] = path
    params: dict[str, Param] = {"k": k, "stars": btag.params["stars"], "isolated": isolated}
    return build_graph(nb + len(path), edges), FamilyTag("Uk", params, roles)


def build_G1(
    k: int,
    ell: int,
    n_ell: int,
    star_sizes: Sequence[int],
    isolated: int = 0,
) -> tuple[Graph, FamilyTag]:
    """Path ``c_0..c_{k-4}`` with a clique ``K_{n_ell}`` spliced in at position ``ell``.

    For ``ell <= k-4`` the joins are ``c_{ell-1} v K v c_ell`` and ``c_{k-4} v b``;
    for ``ell = k-3`` the join is ``c_{k-4} v K v b``.
    """
    if k < 4:
        raise InvalidParams(f"G1 needs k >= 4, got {k}")
    if not 1 <= ell <= k - 3:
        raise InvalidParams(f"ell must lie in [1, {k - 3}], got {ell}")
    if n_ell < 1:
        raise InvalidParams("clique order must be at least 1")
    block, btag = build_B1(star_sizes, isolated)
    b = btag.vertex("b")
    nb = block.n
    c = tuple(range(nb, nb + k - 3))
    q = tuple(range(nb + k - 3, nb + k - 3 + n_ell))
    edges = list(block.edges)
    edges.extend(itertools.combinations(q, 2))
    if ell <= k - 4:
        edges.extend(zip(c[:ell], c[1:ell]))
        edges.extend(zip(c[ell:], c[ell + 1 :]))
        edges.extend((c[ell - 1], w) for w in q)
        edges.extend((c[ell], w) for w in q)
        edges.append((c[-1], b))
    else:
        edges.extend(zip(c, c[1:]))
        edges.extend((c[-1], w) for w in q)
        edges.extend((b, w) for w in q)
    roles = dict(btag.roles)
    roles["c"] = c
    roles["Q"] = q
    params: dict[str, Param] = {
        "k": k,
        "ell": ell,
        "n_ell": n_ell,
        "stars": btag.params["stars"],
        "isolated": isolated,
    }
    return build_graph(nb + k - 3 + n_ell, edges), FamilyTag("G1", params, roles)


def build_G2(k: int, h: Graph, b: int) -> tuple[Graph, FamilyTag]:
    """Block ``h`` with head ``b`` plus the path ``c_0..c_{k-4}`` and the edge ``b c_{k-4}``."""
    if k < 5:
        raise InvalidParams(f"G2 needs k >= 5, got {k}")
    if not 0 <= b < h.n:
        raise InvalidParams(f"head {b} is not a vertex of H")
    report = check_class_B2(h, b)
    if not report.verdict:
        raise NotB2Member("; ".join(report.reasons))
    c = tuple(range(h.n, h.n + k - 3))
    edges = list(h.edges)
    edges.extend(zip(c, c[1:]))
    edges.append((b, c[-1]))
    roles: dict[str, VertexSet] = {
        "b": (b,),
        "H": tuple(v for v in range(h.n) if v != b),
        "c": c,
    }
    params: dict[str, Param] = {"k": k, "b": b}
    return build_graph(h.n + k - 3, edges), FamilyTag("G2", params, roles)


def ns_z_index(s: int) -> dict[tuple[int, int], int]:
    """Vertex label of ``z_{i,j}`` (1-based ``i < j``) in ``N(s)``."""
    return {
        pair: 2 * s + 1 + idx
        for idx, pair in enumerate(itertools.combinations(range(1, s + 1), 2))
    }


def build_Ns(s: int) -> tuple[Graph, FamilyTag]:
    if s < 6:
        raise InvalidParams(f"N(s) needs s >= 6, got {s}")
    x = 0
    a = {i: i for i in range(1, s + 1)}
    bb = {i: s + i for i in range(1, s + 1)}
    z = ns_z_index(s)
    edges = []
    edges.extend(itertools.combinations(a.values(), 2))
    edges.extend(itertools.combinations(bb.values(), 2))
    edges.extend((a[i], bb[j]) for i in a for j in bb if i != j)
    edges.extend((x, zv) for zv in z.values())
    for (i, j), zv in z.items():
        edges.append((a[i], zv))
        edges.append((a[j], zv))
        edges.extend((bb[t], zv) for t in bb if t not in (i, j))
    roles: dict[str, VertexSet] = {
        "x": (x,),
        "B1": tuple(a.values()),
        "B2": tuple(bb.values()),
        "B3": tuple(z.values()),
    }
    tag = FamilyTag("Ns", {"s": s}, roles, {"H": roles["B2"]})
    return build_graph(2 * s + 1 + len(z), edges), tag


def build_Pkl(
    base: Graph,
    base_tag: FamilyTag,
    clique_sizes: Sequence[int],
    h: Iterable[int] | None = None,
) -> tuple[Graph, FamilyTag]:
    """``x_0 v K_{n_1} v ... v K_{n_l} v_H G`` over a base graph ``G``.

    ``h`` defaults to the base tag's ``H`` anchor. Membership of the base in
    the property class is the caller's responsibility.
    """
    sizes = tuple(int(x) for x in clique_sizes)
    if not sizes:
        raise InvalidParams("P(k, l) needs at least one clique")
    if any(x < 1 for x in sizes):
        raise InvalidParams("clique orders must be at least 1")
    if h is None:
        if "H" not in base_tag.anchors:
            raise InvalidParams("base tag carries no H anchor")
        h = base_tag.anchors["H"]
    h = tuple(sorted(set(h)))
    if any(not 0 <= v < base.n for v in h):
        raise InvalidParams("H is not a vertex subset of the base graph")
    x0 = base.n
    cliques = []
    nxt = x0 + 1
    for size in sizes:
        cliques.append(tuple(range(nxt, nxt + size)))
        nxt += size
    edges = list(base.edges)
    for q in cliques:
        edges.extend(itertools.combinations(q, 2))
    chain = [(x0,)] + cliques
    for left, right in zip(chain, chain[1:]):
        edges.extend((u, v) for u in left for v in right)
    edges.extend((u, v) for u in cliques[-1] for v in h)
    roles = dict(base_tag.roles)
    roles["x0"] = (x0,)
    for i, q in enumerate(cliques, 1):
        roles[f"G.{i}"] = q
    anchors = dict(base_tag.anchors)
    anchors["H"] = h
    params: dict[str, Param] = {"base": base_tag.family, **base_tag.params, "sizes": sizes}
    return build_graph(nxt, edges), FamilyTag("Pkl", params, roles, anchors)


def theorem_real_sizes(k: int, zeta: int) -> tuple[int, ...]:
    """Clique orders ``n_1..n_{k-4}``: 1 for the first ``zeta`` cliques, 2 after."""
    if k < 5 or not 0 <= zeta <= k - 4:
        raise InvalidParams(f"need k >= 5 and 0 <= zeta <= k-4, got k={k}, zeta={zeta}")
    return tuple(1 if i < zeta else 2 for i in range(k - 4))


def smallest_b2_block() -> tuple[Graph, int]:
    """The 6-vertex end block ``(H, b)``: a 5-cycle ``1..5`` with head ``0`` on the edge ``12``.

    Smallest member found by exhaustive search over blocks of order <= 7.
    """
    edges = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    return build_graph(6, edges), 0


# -- sidecar serialisation --------------------------------------------------


def _format_vertices(vs: Sequence[int]) -> str:
    parts = []
    i = 0
    while i < len(vs):
        j = i
        while j + 1 < len(vs) and vs[j + 1] == vs[j] + 1:
            j += 1
        parts.append(str(vs[i]) if j == i else f"{vs[i]}-{vs[j]}")
        i = j + 1
    return ",".join(parts)


def _parse_vertices(text: str) -> VertexSet:
    out: list[int] = []
    for item in filter(None, text.split(",")):
        lo, sep, hi = item.partition("-")
        if sep:
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(lo))
    return tuple(out)


def _format_param(value: Param) -> str:
    if isinstance(value, tuple):
        return "[" + ",".join(str(x) for x in value) + "]"
    return str(value)


def _parse_param(text: str) -> Param:
    if text.startswith("[") and text.endswith("]"):
        return tuple(int(x) for x in text[1:-1].split(",") if x)
    try:
        return int(text)
    except ValueError:
        return text


def format_tag(tag: FamilyTag) -> str:
    lines = [f"family={tag.family}"]
    lines.extend(f"{k}={_format_param(v)}" for k, v in tag.params.items())
    lines.extend(f"roles.{k}={_format_vertices(v)}" for k, v in tag.roles.items())
    lines.extend(f"anchors.{k}={_format_vertices(v)}" for k, v in tag.anchors.items())
    return "\n".join(lines) + "\n"


def parse_tag(text: str) -> FamilyTag:
    family = None
    params: dict[str, Param] = {}
    roles: dict[str, VertexSet] = {}
    anchors: dict[str, VertexSet] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"line {lineno}: expected key=value, got {raw!r}")
        try:
            if key == "family":
                family = value
            elif key.startswith("roles."):
                roles[key[len("roles.") :]] = _parse_vertices(value)
            elif key.startswith("anchors."):
                anchors[key[len("anchors.") :]] = _parse_vertices(value)
            else:
                params[key] = _parse_param(value)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if family not in FAMILIES:
        raise ParseError(f"unknown or missing family {family!r}")
    return FamilyTag(family, params, roles, anchors)


def b1_from_tag(tag: FamilyTag) -> tuple[int, VertexSet, list[VertexSet], VertexSet]:
    """Head, centres, leaves per star and isolated vertices of an embedded ``B1``."""
    return tag.vertex("b"), tag.role("S"), tag.grouped("S'"), tag.role("S''")
