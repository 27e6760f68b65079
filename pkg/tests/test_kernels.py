"""The compiled and pure-Python kernels must agree bit for bit."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdcrit import _backend, _kernels_py
from cdcrit.graph import build_graph

compiled = _backend._compiled
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@st.composite
def graphs(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, edges)


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(graphs(), st.integers(1, 5), st.booleans(), st.booleans(), st.integers(0, 2**11 - 1))
def test_cds_search_agrees(g, size, connected, find_all, hit):
    hit &= (1 << g.n) - 1
    adj = list(g.masks)
    a = compiled.cds_search(adj, g.n, size, connected, find_all, hit, 0)
    b = _kernels_py.cds_search(adj, g.n, size, connected, find_all, hit, 0)
    assert list(a[0]) == list(b[0]) and a[1:] == b[1:]


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(graphs(), st.integers(1, 40))
def test_limit_agrees(g, limit):
    adj = list(g.masks)
    a = compiled.cds_search(adj, g.n, 3, True, True, 0, limit)
    b = _kernels_py.cds_search(adj, g.n, 3, True, True, 0, limit)
    assert list(a[0]) == list(b[0]) and a[1:] == b[1:]


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_hamiltonian_path_agrees(g):
    adj = list(g.masks)
    a = compiled.hamiltonian_path(adj, g.n)
    b = _kernels_py.hamiltonian_path(adj, g.n)
    assert (None if a is None else list(a)) == (None if b is None else list(b))


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(graphs(), st.integers(0, 2**11 - 1))
def test_connectivity_kernels_agree(g, mask):
    mask &= (1 << g.n) - 1
    adj = list(g.masks)
    assert compiled.mask_is_connected(adj, mask) == _kernels_py.mask_is_connected(adj, mask)
    assert compiled.count_components(adj, mask) == _kernels_py.count_components(adj, mask)


def test_wide_graphs_use_python_path():
    assert _backend._pick(65) is _kernels_py
    assert _backend._pick(33, _backend.COMPILED_MAX_HP_N) is _kernels_py


def test_backend_name():
    assert _backend.BACKEND in ("cython", "python")
    assert (_backend.BACKEND == "cython") == (compiled is not None)


def test_pure_backend_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, CDCRIT_PURE="1")
    code = (
        "from cdcrit import BACKEND, connected_domination_number as f;"
        "from cdcrit.graph import cycle_graph;"
        "print(BACKEND, f(cycle_graph(7)))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split(None, 1) == ["python", "(5, (0, 1, 2, 3, 4))\n"]


def test_graph_wider_than_word():
    from cdcrit.domination import connected_domination_number
    from cdcrit.graph import star_graph

    assert connected_domination_number(star_graph(69)) == (1, (0,))
