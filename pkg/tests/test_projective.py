import pytest

from conftest import FLOW, graph, portrait
from msdecomp.projective import analyze_single_saddle, hopf_pairs


def single_saddle(n, k, kind=None, extra=(), sinks=1, sources=1, **kw):
    kw = dict(kw, kind=kind) if kind else kw
    return portrait(n, sinks, sources, [("sigma", k)] + list(extra), **kw)


def test_hopf_table():
    assert hopf_pairs() == {(4, 2), (8, 4), (16, 8)}
    assert (4, 2) in hopf_pairs() and (6, 3) not in hopf_pairs()


def test_four_dim_flow_accepted():
    rep = analyze_single_saddle(single_saddle(4, 2, kind=FLOW))
    assert rep.admissible and rep.k == 2
    texts = [c.text for c in rep.structure_claims]
    assert "N is projective-like" in texts
    assert any("M = N" in t for t in texts)
    assert rep.decomposition.g == 0 and rep.decomposition.l == 1


def test_four_dim_diffeo_not_called_projective_like():
    rep = analyze_single_saddle(single_saddle(4, 2))
    assert rep.admissible
    assert "N is projective-like" not in [c.text for c in rep.structure_claims]
    assert any("B^4" in c.text for c in rep.structure_claims)


def test_eight_dim_diffeo_is_projective_like():
    rep = analyze_single_saddle(single_saddle(8, 4))
    assert "N is projective-like" in [c.text for c in rep.structure_claims]


def test_six_dim_rejected_by_table():
    rep = analyze_single_saddle(single_saddle(6, 3))
    assert not rep.admissible and "S^5" in rep.reasons[0].text


def test_three_dim_rejected():
    rep = analyze_single_saddle(single_saddle(3, 1))
    assert not rep.admissible and "n = 3" in rep.reasons[0].text


def test_eight_dim_with_handle():
    # mu = 4, nu = 4 -> g = 1 ; M = (S^7 ⊗ S^1) ♯ N^8
    extra = [("a", 1), ("b", 7), ("c", 1), ("d", 7)]
    p = single_saddle(8, 4, extra=extra, sinks=2, sources=2)
    rep = analyze_single_saddle(p)
    assert rep.admissible and rep.decomposition.g == 1
    assert rep.decomposition.render() == "M = (S^7 ⊗ S^1) ♯ N_1"
    assert any("1 x (S^7 ⊗ S^1) ♯ N" in c.text for c in rep.structure_claims)


def test_with_explicit_graph():
    extra = [("a", 1), ("b", 3)]
    p = single_saddle(4, 2, extra=extra)
    g = graph([("P0", (2,)), "P1"], [("a", "P0", "P1"), ("b", "P0", "P1")])
    rep = analyze_single_saddle(p, g)
    assert rep.admissible and rep.decomposition.g == 1 and rep.decomposition.l == 1


@pytest.mark.parametrize("p,fragment", [
    (portrait(4, saddles=[("x", 2), ("y", 2)]), "exactly one"),
    (portrait(4, saddles=[("x", 2, 2)]), "period"),
    (portrait(5, saddles=[("x", 2)]), "odd"),
    (portrait(6, saddles=[("x", 2)]), "n/2"),
    (portrait(4, saddles=[("x", 0)]), "not admissible"),
])
def test_rejections(p, fragment):
    rep = analyze_single_saddle(p)
    assert not rep.admissible and fragment in rep.reasons[0].text
    assert rep.reasons[0].citation


@pytest.mark.parametrize("n,k", sorted(hopf_pairs()))
def test_inverse_invariance(n, k):
    p = single_saddle(n, k)
    assert analyze_single_saddle(p).admissible == analyze_single_saddle(p.inverse()).admissible
