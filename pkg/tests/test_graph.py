import io

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdcrit.errors import EmptyJoin, InvalidEdge, InvalidSubgraph, ParseError, SelfLoop
from cdcrit.graph import (
    build_graph,
    complement,
    complete_graph,
    components,
    cut_vertices_and_blocks,
    cycle_graph,
    disjoint_union,
    empty_graph,
    format_graph,
    join_onto_subgraph,
    join_sequence,
    parse_graph,
    path_graph,
    read_graph,
    star_graph,
    write_graph,
)

from conftest import to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, edges)


def test_build_graph_examples():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.degrees() == [1, 2, 2, 1]
    k1 = build_graph(1, [])
    assert (k1.n, k1.m) == (1, 0)
    assert build_graph(3, [(0, 1), (0, 1), (1, 2)]).m == 2
    assert build_graph(3, [(1, 0)]).edges == ((0, 1),)


def test_build_graph_rejects_bad_edges():
    with pytest.raises(SelfLoop):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(-1, 0)])


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    p5 = path_graph(5)
    assert complement(complement(p5)) == p5
    two_k2 = build_graph(4, [(0, 1), (2, 3)])
    c4 = complement(two_k2)
    assert nx.is_isomorphic(to_nx(c4), nx.cycle_graph(4))


def test_join_sequence_examples():
    k1, k2 = complete_graph(1), complete_graph(2)
    g, offsets = join_sequence([k1, k1, k1])
    assert g == path_graph(3) and offsets == [0, 1, 2]
    g, _ = join_sequence([k1, k2])
    assert g == complete_graph(3)
    g, offsets = join_sequence([k1, k2, k1])
    assert g.m == 5 and offsets == [0, 1, 3]
    with pytest.raises(EmptyJoin):
        join_sequence([])


def test_join_onto_subgraph_examples():
    g, offsets = join_onto_subgraph(complete_graph(1), path_graph(3), [1])
    assert offsets == [0, 1]
    assert g.degree(2) == 3 and g.m == 3
    assert nx.is_isomorphic(to_nx(g), nx.star_graph(3))
    g, _ = join_onto_subgraph(complete_graph(2), complete_graph(2), [0])
    assert (g.n, g.m) == (4, 4)
    a, b = path_graph(2), cycle_graph(4)
    assert join_onto_subgraph(a, b, range(b.n))[0] == join_sequence([a, b])[0]
    with pytest.raises(InvalidSubgraph):
        join_onto_subgraph(a, b, [4])


def test_components_examples():
    p4 = path_graph(4)
    assert components(p4, ()) == [(0, 1, 2, 3)]
    assert components(p4, {1}) == [(0,), (2, 3)]
    assert components(star_graph(3), {0}) == [(1,), (2,), (3,)]


def test_block_cut_examples():
    dec = cut_vertices_and_blocks(path_graph(5))
    assert dec.cut_vertices == (1, 2, 3)
    assert dec.blocks == ((0, 1), (1, 2), (2, 3), (3, 4))
    dec = cut_vertices_and_blocks(cycle_graph(6))
    assert dec.zeta == 0 and dec.blocks == ((0, 1, 2, 3, 4, 5),)
    # two triangles sharing vertex 2
    bowtie = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    dec = cut_vertices_and_blocks(bowtie)
    assert dec.cut_vertices == (2,) and dec.blocks == ((0, 1, 2), (2, 3, 4))


def test_disjoint_union_offsets():
    g, offsets = disjoint_union([path_graph(2), cycle_graph(3)])
    assert offsets == [0, 2] and g.m == 4 and len(components(g)) == 2


def test_text_round_trip():
    g = build_graph(5, [(3, 4), (0, 2), (1, 2)])
    text = format_graph(g)
    assert text == "5 3\n0 2\n1 2\n3 4\n"
    assert parse_graph("# comment\n" + text) == g
    buf = io.StringIO()
    write_graph(g, buf)
    buf.seek(0)
    assert read_graph(buf) == g


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n0 x\n", "3 2\n0 1\n", "3 1\n0 1 2\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_adjacency_invariants(g):
    for u in range(g.n):
        assert u not in g.adj[u]
        for v in g.adj[u]:
            assert 0 <= v < g.n and u in g.adj[v]
    assert complement(complement(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_cut_vertices_match_component_increase(g):
    dec = cut_vertices_and_blocks(g)
    base = len(components(g))
    raised = tuple(v for v in range(g.n) if len(components(g, {v})) > base)
    assert dec.cut_vertices == raised
    assert set(dec.cut_vertices) == set(nx.articulation_points(to_nx(g)))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_blocks_partition_edges(g):
    dec = cut_vertices_and_blocks(g)
    owners = {e: 0 for e in g.edges}
    for block in dec.blocks:
        bs = set(block)
        for e in g.edges:
            if e[0] in bs and e[1] in bs:
                owners[e] += 1
    assert all(c == 1 for c in owners.values())
    for i, a in enumerate(dec.blocks):
        for b in dec.blocks[i + 1 :]:
            shared = set(a) & set(b)
            assert len(shared) <= 1
            assert shared <= set(dec.cut_vertices)
    expected = sorted(tuple(sorted(c)) for c in nx.biconnected_components(to_nx(g)))
    nontrivial = [b for b in dec.blocks if len(b) > 1]
    assert nontrivial == expected


@pytest.mark.parametrize("length", [2, 3, 6])
def test_join_of_singletons_is_path(length):
    g, _ = join_sequence([complete_graph(1)] * length)
    assert g.m == length - 1
    assert g.degrees().count(1) == 2
