import pytest
from hypothesis import given, strategies as st

from conftest import FLOW, portrait, pts
from msdecomp.errors import HypothesisViolation, ParityError, PreconditionError, SchemaError
from msdecomp.morse import (Conclusion, alternating_partial_sums, check_morse_inequalities,
                            corollary_for_portrait, corollary_heteroclinic,
                            corollary_periodic_trajectory, euler_sum, genus, morse_counts)


@pytest.mark.parametrize("mu,nu,g,k", [(2, 0, 0, 1), (4, 2, 0, 3), (3, 3, 1, 3), (6, 6, 1, 6),
                                       (2, 4, 2, 3)])
def test_genus_examples(mu, nu, g, k):
    r = genus(mu, nu)
    assert (r.g, r.k, r.parity_ok) == (g, k, True)


def test_genus_errors():
    with pytest.raises(ParityError):
        genus(3, 2)
    with pytest.raises(PreconditionError):
        genus(1, 1)
    with pytest.raises(HypothesisViolation):
        genus(6, 2)  # nu < mu - 2


@given(st.integers(2, 60), st.integers(0, 60))
def test_genus_identities(mu, nu):
    if (mu + nu) % 2:
        with pytest.raises(ParityError):
            genus(mu, nu)
    elif nu < mu - 2:
        with pytest.raises(HypothesisViolation):
            genus(mu, nu)
    else:
        r = genus(mu, nu)
        assert 2 * r.g == nu - mu + 2 and 2 * r.k == mu + nu
        assert r.k - r.g == mu - 1  # pieces minus handles = nodes - 1


def test_morse_counts_examples():
    assert morse_counts(portrait(5)) == [1, 0, 0, 0, 0, 1]
    # saddle with unstable_dim k has stable dim n-k
    assert morse_counts(portrait(6, saddles=[("s", 2)])) == [1, 0, 0, 0, 1, 0, 1]
    assert morse_counts(portrait(4, sinks=[2], sources=2))[0] == 2


def test_alternating_sums():
    assert alternating_partial_sums([1, 0, 1, 0, 1]) == [1, -1, 2, -2, 3]
    assert euler_sum([1, 0, 1, 0, 1]) == 3


def test_sphere_passes():
    rep = check_morse_inequalities([1, 0, 0, 0, 1], [1, 0, 0, 0, 1])
    assert rep.ok and rep.first_failure() is None


def test_polar_piece_has_no_first_betti():
    # polar system with no codim-one saddles forces beta_1 = 0
    counts = morse_counts(portrait(4))
    rep = check_morse_inequalities(counts, [1, 1, 0, 1, 1])
    assert not rep.ok and rep.first_failure() == 1
    assert check_morse_inequalities(counts, [1, 0, 0, 0, 1]).ok


def test_euler_on_cp2_like_counts():
    rep = check_morse_inequalities([1, 0, 1, 0, 1], [1, 0, 1, 0, 1])
    assert rep.euler_ok and rep.ok


def test_length_mismatch():
    with pytest.raises(SchemaError):
        check_morse_inequalities([1, 1], [1, 0, 1])


@given(st.lists(st.integers(0, 5), min_size=4, max_size=12))
def test_inequalities_hold_for_equal_sequences(xs):
    rep = check_morse_inequalities(xs, xs)
    assert rep.ok


def test_corollary_examples():
    assert corollary_heteroclinic(2, 0) is Conclusion.MUST_EXIST
    assert corollary_heteroclinic(1, 3) is Conclusion.INCONCLUSIVE
    assert corollary_heteroclinic(3, None) is Conclusion.INCONCLUSIVE
    with pytest.raises(PreconditionError):
        corollary_heteroclinic(0, 0)
    assert corollary_periodic_trajectory(2, 0) is Conclusion.MUST_HAVE_PERIODIC_TRAJECTORY
    assert corollary_periodic_trajectory(1, 3) is Conclusion.INCONCLUSIVE
    with pytest.raises(PreconditionError):
        corollary_periodic_trajectory(0, 0)


def test_corollary_rank_two_never_excludes():
    # a free group of rank 2 contains free groups of every rank
    assert corollary_heteroclinic(5, 2) is Conclusion.INCONCLUSIVE
    assert corollary_heteroclinic(2, 1) is Conclusion.MUST_EXIST


def test_corollary_for_portrait_diffeo():
    # mu = 2, nu = 2 -> g = 1 ; rank 0 < 1 forces an index-1/index-(n-1) intersection
    base = dict(saddles=[("lo", 1), ("hi", 3)], orientable=True, pi1_free_rank=0)
    out = corollary_for_portrait(portrait(4, **base))
    assert out.conclusion is Conclusion.MUST_EXIST and not out.consistent
    with_edge = portrait(4, edges=[pts("lo", "hi")], **base)
    assert corollary_for_portrait(with_edge).consistent


def test_corollary_for_portrait_flow():
    p = portrait(4, saddles=[("lo", 1), ("hi", 3)], kind=FLOW, orientable=True, pi1_free_rank=0)
    out = corollary_for_portrait(p)
    assert out.conclusion is Conclusion.MUST_HAVE_PERIODIC_TRAJECTORY and not out.consistent
    with pytest.raises(PreconditionError):
        corollary_for_portrait(portrait(4, saddles=[("lo", 1), ("hi", 3)], kind=FLOW))
