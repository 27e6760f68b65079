import pytest

from cdcrit.criticality import (
    check_class_B2,
    check_class_P,
    criticality_report,
    is_k_critical,
    lemma1_audit,
    lemma2_audit,
)
from cdcrit.domination import connected_domination_number
from cdcrit.errors import NotConnected
from cdcrit.families import build_Ns, build_Uk, smallest_b2_block
from cdcrit.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph

from conftest import atlas


def test_report_complete_graph():
    rep = criticality_report(complete_graph(4))
    assert (rep.gamma_c, rep.is_critical, rep.k, rep.pairs) == (1, True, 1, ())


def test_report_c5():
    rep = criticality_report(cycle_graph(5))
    assert rep.gamma_c == 3 and rep.is_critical and rep.k == 3
    assert len(rep.pairs) == 5
    assert all(p.gamma_c_after == 2 for p in rep.pairs)
    assert all(p.min_cd_sets_after for p in rep.pairs)


def test_report_p4():
    rep = criticality_report(path_graph(4))
    assert rep.gamma_c == 2 and not rep.is_critical and rep.k is None
    after = {(p.u, p.v): p.gamma_c_after for p in rep.pairs}
    # P4 + 02 and P4 + 13 gain a dominating vertex; P4 + 03 is C4
    assert after == {(0, 2): 1, (0, 3): 2, (1, 3): 1}
    assert rep.failing_pairs() == [(0, 3)]
    assert rep.zeta == 2


def test_report_rejects_disconnected():
    with pytest.raises(NotConnected):
        criticality_report(build_graph(4, [(0, 1), (2, 3)]))


def test_is_k_critical():
    assert is_k_critical(cycle_graph(5), 3) == (True, None)
    assert is_k_critical(cycle_graph(5), 4) == (False, None)
    assert is_k_critical(path_graph(4), 2) == (False, (0, 3))


def test_lemma1_examples():
    assert all(a.holds for a in lemma1_audit(cycle_graph(5), 3))
    g, _ = build_Uk(4, [1, 1], 0)
    assert all(a.holds for a in lemma1_audit(g, 4))
    # non-critical input: reports, never raises
    audits = lemma1_audit(path_graph(4), 2)
    assert [a.lemma_id for a in audits] == ["L1a", "L1b", "L1c"]
    assert not audits[1].holds


def test_lemma2_examples():
    g, _ = build_Uk(4, [1, 1], 0)
    assert all(a.holds for a in lemma2_audit(g))
    star = lemma2_audit(star_graph(3))
    assert not star[0].holds and star[0].violations[0].vertex == 0
    assert all(a.holds for a in lemma2_audit(cycle_graph(6)))


def test_critical_invariants_over_small_graphs():
    """Every critical graph on <= 6 vertices satisfies both lemmas and zeta <= k - 2."""
    seen = 0
    for g in atlas(2, 6):
        rep = criticality_report(g)
        if not rep.is_critical:
            continue
        seen += 1
        assert rep.zeta <= max(rep.k - 2, 0)
        assert all(a.holds for a in lemma1_audit(g, rep.k, rep))
        assert all(a.holds for a in lemma2_audit(g))
    assert seen > 10


def test_class_p_examples():
    g, tag = build_Ns(6)
    rep = check_class_P(g, tag.anchors["H"], 4)
    assert rep.verdict and not rep.reasons
    assert len(rep.vertex_witnesses) == g.n
    assert check_class_P(cycle_graph(5), (0, 1), 3).verdict
    assert check_class_P(complete_graph(4), range(4), 1).verdict


def test_class_p_reports_failed_preconditions():
    rep = check_class_P(complete_graph(4), (0, 1), 1)
    assert not rep.verdict and "not maximal" in rep.reasons[0]
    rep = check_class_P(path_graph(4), (1, 2), 2)
    assert not rep.verdict and any("critical" in r for r in rep.reasons)
    assert not check_class_P(path_graph(4), (7,), 2).verdict


def test_class_b2_examples():
    c6 = check_class_B2(cycle_graph(6), 0)
    assert not c6.verdict and any("gamma_c(H) = 4" in r for r in c6.reasons)
    assert not check_class_B2(complete_graph(4), 0).verdict
    h, b = smallest_b2_block()
    rep = check_class_B2(h, b)
    assert rep.verdict, rep.reasons
    assert connected_domination_number(h)[0] == 3


def test_smallest_b2_block_is_minimum():
    """No block with fewer than 6 vertices passes; at 6 vertices the stored block does."""
    from cdcrit.graph import cut_vertices

    for g in atlas(3, 5):
        if cut_vertices(g):
            continue
        assert not any(check_class_B2(g, b).verdict for b in range(g.n))
