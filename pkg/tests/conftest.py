import networkx as nx
import pytest

from cdcrit.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in h.edges])


def atlas(min_n: int = 1, max_n: int = 7, connected: bool = True) -> list[Graph]:
    """Every graph on ``min_n..max_n`` vertices up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        if not min_n <= h.number_of_nodes() <= max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


@pytest.fixture(scope="session")
def small_connected() -> list[Graph]:
    return atlas(1, 6)
