"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable values. Combinators (complement, sequential joins,
joins onto a designated subgraph) return new graphs together with the
vertex offsets of each input part, so callers can keep track of where
their vertices ended up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, TextIO

from cdcrit import _backend
from cdcrit.errors import EmptyJoin, InvalidEdge, InvalidSubgraph, ParseError, SelfLoop

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise InvalidEdge(f"adjacency has {len(self.adj)} rows for n={self.n}")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open-neighbourhood bitmasks, one per vertex."""
        out = []
        for nbrs in self.adj:
            m = 0
            for w in nbrs:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def non_edges(self) -> list[tuple[int, int]]:
        """Non-adjacent pairs ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.masks[u] >> v & 1
        ]

    def add_edge(self, u: int, v: int) -> Graph:
        return build_graph(self.n, list(self.edges) + [(u, v)])

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..k-1``; also returns the old labels."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_graph(len(keep), edges), keep

    def is_connected(self) -> bool:
        return self.n > 0 and len(components(self)) == 1

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidEdge(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def disjoint_union(parts: Sequence[Graph]) -> tuple[Graph, list[int]]:
    offsets = []
    edges = []
    base = 0
    for g in parts:
        offsets.append(base)
        edges.extend((u + base, v + base) for u, v in g.edges)
        base += g.n
    return build_graph(base, edges), offsets


def complement(g: Graph) -> Graph:
    return build_graph(
        g.n,
        [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)],
    )


def join_sequence(parts: Sequence[Graph]) -> tuple[Graph, list[int]]:
    """``G_1 v G_2 v ... v G_l``: every vertex of part i joined to all of part i+1.

    Only consecutive parts are joined. Returns the graph and the first vertex
    index of each part.
    """
    if not parts:
        raise EmptyJoin("join of an empty sequence")
    union, offsets = disjoint_union(parts)
    edges = list(union.edges)
    for i in range(len(parts) - 1):
        a, b = offsets[i], offsets[i + 1]
        edges.extend(
            (a + u, b + v) for u in range(parts[i].n) for v in range(parts[i + 1].n)
        )
    return build_graph(union.n, edges), offsets


def join_onto_subgraph(g1: Graph, g2: Graph, h: Iterable[int]) -> tuple[Graph, list[int]]:
    """Disjoint union of ``g1`` and ``g2`` plus every edge from ``g1`` to ``h``.

    ``h`` is given in ``g2``'s own labels.
    """
    h = sorted(set(h))
    if any(not 0 <= v < g2.n for v in h):
        raise InvalidSubgraph(f"{h} is not a vertex subset of a {g2.n}-vertex graph")
    union, offsets = disjoint_union([g1, g2])
    off = offsets[1]
    edges = list(union.edges)
    edges.extend((u, off + v) for u in range(g1.n) for v in h)
    return build_graph(union.n, edges), offsets


def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of ``g - removed``, ordered by smallest vertex."""
    gone = set(removed)
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s] or s in gone:
            continue
        seen[s] = True
        stack = [s]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w] and w not in gone:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def component_count(g: Graph, removed: Iterable[int] = ()) -> int:
    """``omega(G - removed)`` via the bitmask kernel."""
    alive = ((1 << g.n) - 1) & ~to_mask(removed)
    return _backend.count_components(g.masks, alive)


@dataclass(frozen=True)
class BlockCutDecomposition:
    cut_vertices: VertexSet
    blocks: tuple[VertexSet, ...] = field(default_factory=tuple)

    @property
    def zeta(self) -> int:
        return len(self.cut_vertices)


def cut_vertices_and_blocks(g: Graph) -> BlockCutDecomposition:
    """Articulation points and blocks by iterative Hopcroft-Tarjan lowpoints.

    Isolated vertices form singleton blocks. Blocks are sorted vertex tuples,
    ordered by their smallest vertex (then lexicographically).
    """
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    blocks: list[VertexSet] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        # frames: (vertex, parent, neighbour iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            nbrs = g.adj[v]
            if i < len(nbrs):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[i]
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(tuple(sorted(block)))
        if root_children > 1:
            cuts.add(root)
    blocks.sort()
    return BlockCutDecomposition(tuple(sorted(cuts)), tuple(blocks))


def cut_vertices(g: Graph) -> VertexSet:
    return cut_vertices_and_blocks(g).cut_vertices


# -- text format ----------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_graph(g: Graph, fh: TextIO) -> None:
    fh.write(format_graph(g))


def read_graph(fh: TextIO) -> Graph:
    return parse_graph(fh.read())
