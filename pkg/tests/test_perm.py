import pytest
from hypothesis import given, strategies as st

from ballot_oop import perm as P
from ballot_oop.perm import CycleDecomposition, Permutation, PermutationError

from conftest import ballot, cycles_of, descents, m_of, odd_order, sig, sums

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def W(text):
    return Permutation.parse(text)


def C(text, n=None):
    return CycleDecomposition.parse(text, n)


# -- words -----------------------------------------------------------------

@pytest.mark.parametrize("text, want", [
    ("31452", (-1, 1, 1, -1)), ("12345", (1, 1, 1, 1)), ("21", (-1,)), ("1", ()),
])
def test_signature(text, want):
    assert P.updown_signature(W(text)) == want


@pytest.mark.parametrize("text, want", [("31452", "1001"), ("123", "00"), ("321", "11"), ("1", "")])
def test_index(text, want):
    assert P.index_of(W(text)) == want


def test_counts():
    w = W("31452")
    assert (P.ascent_count(w), P.descent_count(w)) == (2, 2)
    assert P.descent_count(W("14352")) == 2
    ident = Permutation(range(1, 8))
    assert (P.ascent_count(ident), P.descent_count(ident)) == (6, 0)


@pytest.mark.parametrize("text, want", [("31452", False), ("14352", True), ("1", True), ("21", False)])
def test_is_ballot(text, want):
    assert P.is_ballot(W(text)) is want


@pytest.mark.parametrize("text, want", [("14352", 0), ("21", -1), ("25341", 0), ("321", -2)])
def test_t_statistic(text, want):
    assert P.t_statistic(W(text)) == want


@pytest.mark.parametrize("word, want", [((1, 3, 2), True), ((1,), True), ((1, 2), False),
                                        ((5, 9, 2), True), ((3, 6, 1, 9, 4), True)])
def test_is_dyck_word_any_letters(word, want):
    assert P.is_dyck_word(word) is want


def test_reverse_word():
    assert P.reverse_word(W("14352")) == W("25341")
    assert P.reverse_word(W("1")) == W("1")
    rev = P.reverse_word(Permutation(range(1, 7)))
    assert rev.letters == (6, 5, 4, 3, 2, 1) and P.descent_count(rev) == 5


@pytest.mark.parametrize("bad", [(1, 1), (0, 1), (2, 3), (), (1, 3)])
def test_permutation_rejects(bad):
    with pytest.raises(PermutationError):
        Permutation(bad)


def test_parse_formats():
    assert W("14352") == W("1 4 3 5 2") == W("1,4,3,5,2")
    assert str(W("14352")) == "1 4 3 5 2"
    assert W("10 1 2 3 4 5 6 7 8 9").n == 10


# -- cycles ----------------------------------------------------------------

def test_cycle_decomposition_examples():
    assert P.cycle_decomposition(W("21")).cycles == ((1, 2),)
    d = C("(1,3,9)(4,2,8,5,6)(7)", 9)
    assert d.cycles == ((1, 3, 9), (2, 8, 5, 6, 4), (7,))
    assert P.cycle_decomposition(W("123")).cycles == ((1,), (2,), (3,))
    assert str(C("(2,4,5,6,8)", 9)) == "(1)(2,4,5,6,8)(3)(7)(9)"


def test_cycle_decomposition_rejects_overlap_and_gaps():
    with pytest.raises(PermutationError):
        P.from_cycles([(1, 2), (2, 3)])
    with pytest.raises(PermutationError):
        P.from_cycles([(1, 3)], n=2)


@pytest.mark.parametrize("cycle, want", [((4, 2, 8, 5, 6), (2, 3, 2)), ((7,), (1, 0, 0)),
                                         ((1, 2, 3), (2, 1, 1)), ((1, 3, 2), (1, 2, 1))])
def test_cycle_stats(cycle, want):
    s = P.cycle_stats(cycle)
    assert (s.cyclic_ascents, s.cyclic_descents, s.m_value) == want


def test_m_statistic_examples():
    assert P.m_statistic(C("(1,3,9)(4,2,8,5,6)(7)", 9)) == 3
    assert P.m_statistic(C("", 5)) == 0
    assert P.m_statistic(C("(1,3,2)")) == 1


def test_odd_order_examples():
    assert P.is_odd_order(C("(3,1,4)(2,5,6,7,9)", 9))
    assert P.is_odd_order(C("", 4))
    assert not P.is_odd_order(C("(1,2)"))


def test_reverse_cycles_examples():
    assert P.reverse_cycles(C("(2,4,5,6,8)", 9)) == C("(8,6,5,4,2)", 9)
    assert P.reverse_cycles(C("", 3)) == C("", 3)
    assert P.reverse_cycles(C("(1,2,3)")) == C("(1,3,2)")


# -- properties against the brute-force helpers ----------------------------

@given(perms)
def test_word_statistics_match_definitions(p):
    w = p.letters
    assert list(P.updown_signature(p)) == sig(w)
    assert P.prefix_sums(p) == sums(w)
    assert P.is_ballot(p) == ballot(w)
    assert P.t_statistic(p) == min(sums(w))
    assert P.descent_count(p) == descents(w)
    assert P.ascent_count(p) + P.descent_count(p) == p.n - 1
    assert P.signature_of_index(P.index_of(p)) == P.updown_signature(p)


@given(perms)
def test_ballot_iff_t_zero(p):
    t = P.t_statistic(p)
    assert t <= 0
    assert P.is_ballot(p) == (t == 0)


@given(perms)
def test_cycles_round_trip_and_match_definitions(p):
    d = P.cycle_decomposition(p)
    assert P.to_permutation(d) == p
    assert sorted(map(sorted, d.cycles)) == sorted(map(sorted, cycles_of(p.letters)))
    assert all(c[0] == min(c) for c in d.cycles)
    assert [c[0] for c in d.cycles] == sorted(c[0] for c in d.cycles)
    assert P.m_statistic(d) == m_of(p.letters)
    assert P.is_odd_order(d) == odd_order(p.letters)


@given(perms, st.data())
def test_m_rotation_invariant(p, data):
    d = P.cycle_decomposition(p)
    rotated = []
    for c in d.cycles:
        k = data.draw(st.integers(0, len(c) - 1))
        rotated.append(c[k:] + c[:k])
    assert P.from_cycles(rotated) == d
    assert sum(P.cycle_stats(c).m_value for c in rotated) == P.m_statistic(d)


@given(perms)
def test_cycle_stat_sums_and_odd_cycles_lean(p):
    for c in P.cycle_decomposition(p).cycles:
        s = P.cycle_stats(c)
        assert s.cyclic_ascents + s.cyclic_descents == len(c)
        if len(c) % 2 and len(c) >= 3:
            assert s.cyclic_ascents != s.cyclic_descents


@given(perms)
def test_reverse_word_involution_and_transport(p):
    q = P.reverse_word(p)
    assert P.reverse_word(q) == p
    n, d, t = p.n, P.descent_count(p), P.t_statistic(p)
    assert P.descent_count(q) == n - 1 - d
    assert P.t_statistic(q) == t + 2 * d - n + 1


@given(perms)
def test_reverse_cycles_preserves_m_and_parity(p):
    d = P.cycle_decomposition(p)
    r = P.reverse_cycles(d)
    assert P.m_statistic(r) == P.m_statistic(d)
    assert P.is_odd_order(r) == P.is_odd_order(d)


def test_m_zero_iff_identity_and_m_limit_exhaustive():
    from conftest import sn
    for n in range(1, 8):
        for w in sn(n):
            d = P.cycle_decomposition(Permutation(w))
            m = P.m_statistic(d)
            assert (m == 0) == (w == tuple(range(1, n + 1)))
            if P.is_odd_order(d):
                assert 2 * m <= n - len(d.cycles)
