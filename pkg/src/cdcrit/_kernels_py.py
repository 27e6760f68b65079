"""Pure-Python hot kernels over bitmask adjacency.

Used when the compiled ``_kernels`` extension is unavailable or when
``CDCRIT_PURE=1`` is set. Results are identical to the compiled kernels,
including enumeration order and path reconstruction.

Every kernel takes ``adj``: a list of open-neighbourhood bitmasks
(bit ``w`` of ``adj[v]`` set iff ``vw`` is an edge).
"""

from __future__ import annotations


def mask_is_connected(adj: list[int], mask: int) -> bool:
    """True iff ``mask`` is non-empty and induces a connected subgraph."""
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        while frontier:
            low = frontier & -frontier
            reach |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def count_components(adj: list[int], alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & alive & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def cds_search(
    adj: list[int],
    n: int,
    size: int,
    connected: bool,
    find_all: bool,
    hit_mask: int,
    limit: int,
) -> tuple[list[int], int, bool]:
    """Search vertex subsets of exactly ``size`` vertices in lexicographic order.

    A subset is accepted when it dominates the graph, induces a connected
    subgraph (if ``connected``) and meets ``hit_mask`` (if non-zero).
    Returns ``(accepted, visited, complete)``; ``complete`` is False when the
    search stopped because ``visited`` reached ``limit`` (``limit <= 0``
    disables the cap).
    """
    if size < 1 or size > n:
        return [], 0, True
    full = (1 << n) - 1
    closed = [adj[v] | (1 << v) for v in range(n)]
    cover_from = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        cover_from[v] = cover_from[v + 1] | closed[v]

    found: list[int] = []
    visited = 0
    # explicit stack: (next candidate, chosen mask, dominated mask) per depth
    picks = [0] * size
    doms = [0] * (size + 1)
    chosen = [0] * (size + 1)
    depth = 0
    picks[0] = 0
    while depth >= 0:
        v = picks[depth]
        remaining = size - depth - 1
        if v > n - 1 - remaining:
            depth -= 1
            if depth >= 0:
                picks[depth] += 1
            continue
        visited += 1
        if 0 < limit <= visited:
            return found, visited, False
        ndom = doms[depth] | closed[v]
        nchosen = chosen[depth] | (1 << v)
        if remaining == 0:
            if (
                ndom == full
                and (not hit_mask or nchosen & hit_mask)
                and (not connected or mask_is_connected(adj, nchosen))
            ):
                found.append(nchosen)
                if not find_all:
                    return found, visited, True
            picks[depth] += 1
            continue
        if full & ~ndom & ~cover_from[v + 1]:
            picks[depth] += 1
            continue
        doms[depth + 1] = ndom
        chosen[depth + 1] = nchosen
        depth += 1
        picks[depth] = v + 1
    return found, visited, True


def _reconstruct(adj: list[int], n: int, lookup) -> list[int] | None:
    full = (1 << n) - 1
    ends = lookup(full)
    if not ends:
        return None
    v = (ends & -ends).bit_length() - 1
    mask = full
    seq = [v]
    while mask != (1 << v):
        mask ^= 1 << v
        cand = lookup(mask) & adj[v]
        v = (cand & -cand).bit_length() - 1
        seq.append(v)
    return seq


def hamiltonian_path(adj: list[int], n: int) -> list[int] | None:
    """Bitmask DP over (visited set, endpoint); returns the canonical path."""
    if n == 0:
        return []
    layer = {1 << v: 1 << v for v in range(n)}
    table = dict(layer)
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            reach = 0
            e = ends
            while e:
                low = e & -e
                reach |= adj[low.bit_length() - 1]
                e ^= low
            reach &= ~mask
            while reach:
                low = reach & -reach
                key = mask | low
                nxt[key] = nxt.get(key, 0) | low
                reach ^= low
        table.update(nxt)
        layer = nxt
    return _reconstruct(adj, n, lambda m: table.get(m, 0))
