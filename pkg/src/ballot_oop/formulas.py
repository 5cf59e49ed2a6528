"""Closed-form counts, evaluated with exact integer arithmetic.

Every formula declares the range of ``n`` where it is known to hold; calling
it outside that range raises :class:`DomainError` instead of returning a
number that merely looks plausible.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable


class DomainError(ValueError):
    """A formula was evaluated outside its range of validity."""


class UnsupportedString(DomainError):
    """No hard-coded polynomial exists for this binary string."""


@dataclass(frozen=True)
class FormulaDomain:
    name: str
    valid: Callable[..., bool]
    describe: str

    def check(self, *args):
        if not self.valid(*args):
            raise DomainError(f"{self.name}{args}: valid only for {self.describe}")


FORMULAS: dict[str, FormulaDomain] = {}


def formula(name: str, valid: Callable[..., bool], describe: str):
    dom = FormulaDomain(name, valid, describe)
    FORMULAS[name] = dom

    def wrap(fn):
        @functools.wraps(fn)
        def checked(*args):
            dom.check(*args)
            return fn(*args)
        checked.domain = dom
        return checked
    return wrap


def exact_int(x) -> int:
    """Convert an exact rational to int, refusing anything non-integral."""
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


# -- Eulerian numbers -----------------------------------------------------

_EULER_ROWS: list[list[int]] = [[1]]


def _euler_row(n: int) -> list[int]:
    # Rows only grow by appending complete lists, so readers never see a
    # partial row.
    while len(_EULER_ROWS) <= n:
        m = len(_EULER_ROWS)
        prev = _EULER_ROWS[-1]
        row = []
        for d in range(m):
            a = prev[d] if d < len(prev) else 0
            b = prev[d - 1] if 0 <= d - 1 < len(prev) else 0
            row.append((d + 1) * a + (m - d) * b)
        _EULER_ROWS.append(row)
    return _EULER_ROWS[n]


def eulerian(n: int, d: int) -> int:
    """Permutations of size ``n`` with ``d`` descents; ``E(0,0) = 1``.

    Zero for ``d < 0`` and ``d >= max(n, 1)``, so ``E(0, 1) = 0``.
    """
    if n < 0:
        raise DomainError("eulerian: n must be >= 0")
    row = _euler_row(n)
    return row[d] if 0 <= d < len(row) else 0


def eulerian_e1(n: int) -> int:
    return 2**n - n - 1


def eulerian_e2(n: int) -> int:
    return 3**n - (n + 1) * 2**n + comb(n + 1, 2)


def eulerian_e3(n: int) -> int:
    return 4**n - (n + 1) * 3**n + comb(n + 1, 2) * 2**n - comb(n + 1, 3)


def eulerian_catalan(n: int) -> int:
    """``2 E(2n, n-1)``, with ``EC(0) = 1``."""
    if n < 0:
        raise DomainError("eulerian_catalan: n must be >= 0")
    if n == 0:
        return 1
    return 2 * eulerian(2 * n, n - 1)


def double_factorial(m: int) -> int:
    """``m!!`` for ``m >= -1``; ``(-1)!! = 0!! = 1``."""
    if m < -1:
        raise DomainError("double_factorial: m must be >= -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


# -- totals and per-d formulas ---------------------------------------------

@formula("total_ballot", lambda n: n >= 1, "n >= 1")
def total_ballot(n: int) -> int:
    if n % 2 == 0:
        return double_factorial(n - 1) ** 2
    return double_factorial(n) * double_factorial(n - 2)


@formula("a_formula", lambda n, d: n >= 1, "n >= 1")
def a_formula(n: int, d: int) -> int:
    """Permutations with ``d`` descents that begin with an ascent."""
    return (d + 1) * eulerian(n - 1, d)


@formula("b1_formula", lambda n: n >= 1, "n >= 1")
def b1_formula(n: int) -> int:
    return 2 * eulerian(n - 1, 1)


@formula("b2_formula", lambda n: n >= 2, "n >= 2")
def b2_formula(n: int) -> int:
    return 3 * eulerian(n - 1, 2) - 2 * comb(n, 3) + comb(n, 2) - 1


@formula("b3_formula", lambda n: n >= 4, "n >= 4")
def b3_formula(n: int) -> int:
    return (4 * eulerian(n - 1, 3)
            - (comb(n, 3) - comb(n, 2) + 4) * 2 ** (n - 2)
            - 22 * comb(n, 5) + 16 * comb(n, 4) - 4 * comb(n, 3) + 2 * n)


@formula("c_formula", lambda n, d: n == 1 or (n >= 3 and n % 2 == 1), "n = 1 or odd n >= 3")
def c_formula(n: int, d: int) -> int:
    """Number of ``n``-cycles with M equal to ``d``."""
    if n == 1:
        return 1 if d == 0 else 0
    if d <= 0 or d > (n - 1) // 2:
        return 0
    return 2 * eulerian(n - 1, d - 1)


@formula("b_max_formula", lambda size: size >= 1 and size % 2 == 1, "odd size >= 1")
def b_max_formula(size: int) -> int:
    """``b(2n+1, n)``, taking the size ``2n+1`` as argument."""
    return eulerian_catalan((size - 1) // 2)


@formula("b_2n_formula", lambda n: n >= 1, "n >= 1")
def b_2n_formula(n: int) -> int:
    """``b(2n, n-1)`` from splitting into two Dyck words."""
    return exact_div(dyck_pair_total(n), 2)


def dyck_pair_total(n: int) -> int:
    """Sum over odd k of ``C(2n,k) EC((k-1)/2) EC((2n-k-1)/2)``."""
    m = 2 * n
    return sum(comb(m, k) * eulerian_catalan((k - 1) // 2)
               * eulerian_catalan((m - k - 1) // 2)
               for k in range(1, m, 2))


@formula("p_second_last_formula", lambda n: n >= 2, "n >= 2")
def p_second_last_formula(n: int) -> int:
    """``p(2n+1, n-1)``: one long cycle, or three maximal-M odd cycles."""
    size = 2 * n + 1
    triple = 0
    for k in range(1, 2 * n, 2):
        for l in range(1, size - k + 1, 2):
            rest = 2 * n - k - l
            if rest < 0:
                continue
            triple += (comb(size, k) * comb(size - k, l)
                       * eulerian_catalan((k - 1) // 2)
                       * eulerian_catalan((l - 1) // 2)
                       * eulerian_catalan(rest // 2))
    return 2 * eulerian(2 * n, n - 2) + exact_div(triple, 6)


# -- up-down polynomials and f(r, n) -------------------------------------

UD_POLYNOMIALS: dict[str, Callable[[int], int]] = {
    "0": lambda n: 1,
    "1": lambda n: comb(n, 1) - 1,
    "01": lambda n: comb(n, 2) - 1,
    "11": lambda n: comb(n, 2) - comb(n, 1) + 1,
    "011": lambda n: 2 * comb(n, 3) - comb(n, 2) + 1,
    "111": lambda n: comb(n, 3) - comb(n, 2) + comb(n, 1) - 1,
    "0111": lambda n: 3 * comb(n, 4) - 2 * comb(n, 3) + comb(n, 2) - 1,
    "01011": lambda n: 16 * comb(n, 5) - 5 * comb(n, 4) + comb(n, 2) - 1,
    "00111": lambda n: 6 * comb(n, 5) - 3 * comb(n, 4) + comb(n, 3) - 1,
}


def _check_binary(r: str):
    if not r or set(r) - {"0", "1"}:
        raise ValueError(f"not a binary string: {r!r}")


def ud_reduce(r: str) -> str:
    """Strip trailing zeros (``UD(n, r0) = UD(n, r)``), keeping at least one bit."""
    _check_binary(r)
    return r.rstrip("0") or "0"


def ud_polynomial(r: str, n: int) -> int:
    """Permutations of size ``n`` whose index is ``r`` padded with zeros.

    Valid when ``n - 1 >= len(r)``; raises :class:`UnsupportedString` when
    ``r`` does not reduce to a tabulated string.
    """
    key = ud_reduce(r)
    if key not in UD_POLYNOMIALS:
        raise UnsupportedString(f"no polynomial for UD(n, {r})")
    if n - 1 < len(r):
        raise DomainError(f"UD(n, {r}) polynomial needs n - 1 >= {len(r)}, got n = {n}")
    return UD_POLYNOMIALS[key](n)


def _f10(n):
    return (n - 2) * 2 ** (n - 1) - Fraction((3 * n - 1) * (n - 2), 2)


def _f00(n):
    return 2**n - Fraction(n * n, 2) - Fraction(3 * n, 2) + 1


def _f110(n):
    return (Fraction(n * n - 5 * n + 8, 8) * 2**n - Fraction(2, 3) * n**3
            + Fraction(7, 2) * n**2 - Fraction(35, 6) * n + 2)


def _f010(n):
    return (Fraction(n * n - n - 8, 8) * 2**n - Fraction(5, 6) * n**3
            + 3 * n**2 - Fraction(1, 6) * n - 2)


def _f0110(n, original_sign=False):
    lead = comb(n, 3) - comb(n, 2) + 4
    if original_sign:
        # Original sign of the leading term; goes negative (e.g. -64 at n = 5).
        lead = comb(n, 2) - comb(n, 3) - 4
    return (lead * 2 ** (n - 2) - 11 * comb(n, 4) + 5 * comb(n, 3)
            - 2 * comb(n, 2) - 2 * n + 3)


F_CLOSED_MIN_N = {"10": 2, "00": 2, "110": 2, "010": 2, "0110": 3}


def f_closed(r: str, n: int, original_sign: bool = False) -> int:
    """Closed form for ``f(r, n)`` with ``r`` in {10, 00, 110, 010, 0110}.

    ``f(0110, n)`` uses the sign-corrected leading term
    ``(C(n,3) - C(n,2) + 4) 2^(n-2)`` unless ``original_sign`` is set.
    """
    forms = {"10": _f10, "00": _f00, "110": _f110, "010": _f010}
    if r not in F_CLOSED_MIN_N:
        raise UnsupportedString(f"no closed form for f({r}, n)")
    if n < F_CLOSED_MIN_N[r]:
        raise DomainError(f"f({r}, n) closed form needs n >= {F_CLOSED_MIN_N[r]}")
    if r == "0110":
        return _f0110(n, original_sign)
    return exact_int(forms[r](n))
