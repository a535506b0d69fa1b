import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import portrait, pts, random_case
from msdecomp.errors import HypothesisViolation, OrderCycleError
from msdecomp.order import (chain_walk, cuttable_saddles, cutting_sequence, find_cuttable_saddle,
                            smale_order)


def test_no_edges_empty_relation():
    o = smale_order(portrait(4, saddles=[("a", 1), ("b", 3)]))
    assert o.pairs == frozenset() and o.closure() == frozenset()


def test_chain_closure():
    p = portrait(5, saddles=[("s", 2), ("s1", 2), ("s2", 2)],
                 edges=[pts("s", "s1"), pts("s1", "s2")])
    o = smale_order(p)
    assert o.closure() == {("s", "s1"), ("s1", "s2"), ("s", "s2")}
    assert o.covering() == {("s", "s1"), ("s1", "s2")}
    assert o.less("s", "s2") and not o.less("s2", "s")
    assert o.minimal() == ["s"] and o.maximal() == ["s2"]
    assert o.topological.index("s") < o.topological.index("s2")


def test_two_cycle_rejected():
    p = portrait(5, saddles=[("a", 2), ("b", 2)], edges=[pts("a", "b"), pts("b", "a")])
    with pytest.raises(OrderCycleError) as ei:
        smale_order(p)
    assert set(ei.value.cycle) == {"a", "b"}


def test_single_saddle_is_cuttable():
    assert find_cuttable_saddle(portrait(4, saddles=[("s", 3)])) == "s"


def test_chain_of_two_gives_maximal_index_one():
    # for index-1 saddles the edge lies on the stable separatrix of the lower one
    p = portrait(4, saddles=[("p", 1), ("q", 1)], edges=[pts("p", "q")])
    assert find_cuttable_saddle(p) == smale_order(p).maximal()[0] == "q"


def test_chain_of_two_upper_index():
    # for index-(n-1) saddles the edge lies on the unstable separatrix of the upper one
    p = portrait(4, saddles=[("p", 3), ("q", 3)], edges=[pts("p", "q")])
    assert find_cuttable_saddle(p) == "p"
    assert chain_walk(p, "q") == ["q", "p"]


def test_no_cuttable_saddle():
    with pytest.raises(HypothesisViolation):
        find_cuttable_saddle(portrait(4))
    # every separatrix touched: needs a cycle of points edges
    p = portrait(4, saddles=[("p", 3), ("q", 3)], edges=[pts("p", "q"), pts("q", "p")])
    with pytest.raises(HypothesisViolation):
        find_cuttable_saddle(p)


def test_ties_go_to_lowest_id():
    p = portrait(4, saddles=[("b", 3), ("a", 1), ("c", 3)])
    assert cuttable_saddles(p) == ["a", "b", "c"]
    assert find_cuttable_saddle(p) == "a"


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_cutting_sequence_covers_all_codim_one(seed):
    p, _ = random_case(random.Random(seed))
    seq = cutting_sequence(p)
    assert sorted(seq) == sorted(o.id for o in p.codim_one_saddles())
    clo = smale_order(p).closure()
    assert all(a != b for a, b in clo)  # strict
