from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from ballot_oop import formulas as F
from ballot_oop import oracle as O
from ballot_oop.reference_tables import BND


def test_eulerian_examples():
    assert F.eulerian(4, 1) == 11
    assert F.eulerian(4, 2) == 11
    assert F.eulerian(0, 0) == 1
    assert F.eulerian(0, 1) == 0
    assert F.eulerian(5, -1) == 0


@pytest.mark.parametrize("n", range(0, 31))
def test_eulerian_closed_forms(n):
    e1 = 2**n - n - 1
    e2 = 3**n - (n + 1) * 2**n + comb(n + 1, 2)
    e3 = 4**n - (n + 1) * 3**n + comb(n + 1, 2) * 2**n - comb(n + 1, 3)
    assert F.eulerian(n, 1) == e1
    assert F.eulerian(n, 2) == e2
    assert F.eulerian(n, 3) == e3
    if n >= 1:
        assert (F.eulerian_e1(n), F.eulerian_e2(n), F.eulerian_e3(n)) == (e1, e2, e3)


@pytest.mark.parametrize("n", range(0, 16))
def test_eulerian_row_sums(n):
    assert sum(F.eulerian(n, d) for d in range(max(n, 1))) == factorial(n)


def test_eulerian_against_oracle():
    for n in range(1, 10):
        for d in range(n):
            assert F.eulerian(n, d) == O.count_descents(n, d)


def test_eulerian_catalan():
    assert F.eulerian_catalan(0) == 1
    assert F.eulerian_catalan(2) == 22
    assert F.eulerian_catalan(3) == 604
    assert F.eulerian_catalan(5) == 2620708


def test_double_factorial():
    assert [F.double_factorial(m) for m in (-1, 0, 1, 5, 6)] == [1, 1, 1, 15, 48]
    with pytest.raises(F.DomainError):
        F.double_factorial(-2)


def test_total_ballot():
    assert [F.total_ballot(n) for n in (1, 4, 5)] == [1, 9, 45]
    for n in range(1, 11):
        assert F.total_ballot(n) == sum(O.count_ballot(n, d) for d in range(n))


def test_a_formula():
    assert F.a_formula(4, 1) == 8
    assert F.a_formula(5, 2) == 33
    assert F.a_formula(1, 0) == 1
    for n in range(2, 9):
        assert F.a_formula(n, 0) == 1
        for d in range(n):
            assert F.a_formula(n, d) == O.count_ascent_start(n, d)


@pytest.mark.parametrize("fn, n, want", [
    (F.b1_formula, 5, 22), (F.b1_formula, 3, 2), (F.b1_formula, 25, 33554382),
    (F.b2_formula, 6, 172), (F.b2_formula, 5, 22), (F.b2_formula, 25, 846030314842),
    (F.b3_formula, 7, 604), (F.b3_formula, 8, 7296), (F.b3_formula, 25, 1097660274098482),
    (F.b_max_formula, 9, 31238), (F.b_max_formula, 11, 2620708), (F.b_max_formula, 1, 1),
    (F.b_2n_formula, 3, 172), (F.b_2n_formula, 4, 7296), (F.b_2n_formula, 1, 1),
    (F.p_second_last_formula, 2, 22), (F.p_second_last_formula, 3, 856),
    (F.p_second_last_formula, 4, 54746),
])
def test_count_formula_examples(fn, n, want):
    assert fn(n) == want


def test_formulas_reproduce_reference_table():
    for n in range(1, 26):
        row = BND[n]
        assert F.b1_formula(n) == row[1]
        if n >= 2:
            assert F.b2_formula(n) == row[2]
        if n >= 4:
            assert F.b3_formula(n) == row[3]
        if n % 2 and n <= 11:
            assert F.b_max_formula(n) == row[(n - 1) // 2]
        if n % 2 == 0 and n // 2 - 1 <= 5:
            assert F.b_2n_formula(n // 2) == row[n // 2 - 1]
        if n % 2 and 5 <= n <= 13:
            assert F.p_second_last_formula((n - 1) // 2) == row[(n - 1) // 2 - 1]


def test_formulas_against_oracle():
    for n in range(1, 11):
        assert F.b1_formula(n) == O.count_ballot(n, 1)
        if n >= 2:
            assert F.b2_formula(n) == O.count_ballot(n, 2)
        if n >= 4:
            assert F.b3_formula(n) == O.count_ballot(n, 3)
        if n % 2:
            assert F.b_max_formula(n) == O.count_ballot(n, (n - 1) // 2)
            for d in range(n):
                assert F.c_formula(n, d) == O.count_cycles_m(n, d)
        else:
            assert F.b_2n_formula(n // 2) == O.count_ballot(n, n // 2 - 1)
        if n % 2 and n >= 5:
            assert F.p_second_last_formula((n - 1) // 2) == O.count_oop(n, (n - 1) // 2 - 1)


def test_cross_formula_consistency():
    assert F.b_2n_formula(3) == F.b2_formula(6)
    assert F.b_2n_formula(4) == F.b3_formula(8)
    assert F.dyck_pair_total(3) == 132 + 80 + 132


def test_c_formula_examples_and_domain():
    assert F.c_formula(3, 1) == 2
    assert F.c_formula(1, 0) == 1
    assert F.c_formula(7, 4) == 0
    for n in (2, 4, 6):
        with pytest.raises(F.DomainError):
            F.c_formula(n, 1)


@pytest.mark.parametrize("fn, bad", [
    (F.b2_formula, 1), (F.b3_formula, 3), (F.b_max_formula, 4),
    (F.p_second_last_formula, 1), (F.b1_formula, 0), (F.total_ballot, 0),
])
def test_domain_errors(fn, bad):
    with pytest.raises(F.DomainError):
        fn(bad)


def test_exact_helpers():
    assert F.exact_div(10, 2) == 5
    with pytest.raises(ArithmeticError):
        F.exact_div(7, 2)
    with pytest.raises(ArithmeticError):
        F.exact_int(F.Fraction(1, 3))


# -- UD polynomials and f closed forms -------------------------------------

def test_ud_examples():
    assert F.ud_polynomial("011", 4) == 3
    assert F.ud_polynomial("11", 5) == 6
    assert F.ud_polynomial("1", 3) == 2
    assert F.ud_polynomial("0", 9) == 1
    assert F.ud_polynomial("0110", 6) == F.ud_polynomial("011", 6)


@pytest.mark.parametrize("r", sorted(F.UD_POLYNOMIALS))
def test_ud_polynomials_against_oracle(r):
    for n in range(len(r) + 1, 11):
        assert F.ud_polynomial(r, n) == O.count_ud(n, r)


def test_ud_rejects():
    with pytest.raises(F.UnsupportedString):
        F.ud_polynomial("101", 6)
    with pytest.raises(F.DomainError):
        F.ud_polynomial("011", 3)


def test_ud_011_below_declared_range():
    # read as "index begins 011, zeros after", the count at n = 2, 3 is
    # |A(n,2)| - |B(n,2)| = 0, and the polynomial agrees there
    for n in (2, 3):
        gap = O.count_ascent_start(n, 2) - O.count_ballot(n, 2)
        assert F.UD_POLYNOMIALS["011"](n) == gap == 0


def test_f_closed_examples():
    assert F.f_closed("10", 2) == 0
    assert F.f_closed("00", 4) == 3
    assert F.f_closed("0110", 6) == 40
    assert F.f_closed("0110", 5) == 0
    assert F.f_closed("0110", 5, original_sign=True) == -64


@pytest.mark.parametrize("r", ["10", "00", "110", "010", "0110"])
def test_f_closed_against_oracle(r):
    lo = 5 if r == "0110" else 2
    for n in range(lo, 11):
        assert F.f_closed(r, n) == O.count_f(r, n)


def test_f_closed_rejects():
    with pytest.raises(F.UnsupportedString):
        F.f_closed("1110", 6)
    with pytest.raises(F.DomainError):
        F.f_closed("0110", 2)


CHECKED = [F.total_ballot, F.a_formula, F.b1_formula, F.b2_formula, F.b3_formula,
           F.c_formula, F.b_max_formula, F.b_2n_formula, F.p_second_last_formula]


def test_every_checked_formula_is_registered():
    assert {fn.domain.name for fn in CHECKED} == set(F.FORMULAS)


@given(st.integers(-3, 60), st.integers(-2, 10))
def test_formula_domains_hold(n, d):
    # inside its recorded domain a formula returns an int; outside it raises
    for fn in CHECKED:
        args = (n, d) if fn.__wrapped__.__code__.co_argcount == 2 else (n,)
        if fn.domain.valid(*args):
            assert isinstance(fn(*args), int)
        else:
            with pytest.raises(F.DomainError):
                fn(*args)
