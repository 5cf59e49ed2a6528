"""Recurrences for p(n, d), f(r, n) and b(n, d, k), plus the parity binomial sum.

None of these enumerate S_n except where noted (f base cases and UD values
for strings without a tabulated polynomial).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import oracle
from .formulas import (DomainError, UnsupportedString, eulerian, exact_int,
                       ud_polynomial)
from .oracle import CountTable


# -- p(n, d) --------------------------------------------------------------

@dataclass
class PTable:
    max_n: int
    max_d: int
    values: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    def row(self, n: int) -> list[int]:
        return [self.values[n, d] for d in range(self.max_d + 1)]

    def as_count_table(self) -> CountTable:
        return CountTable(("n", "d"), dict(self.values))


def p_recurrence_table(max_n: int, max_d: int, form: str = "direct",
                       empty_weight: int = 1) -> PTable:
    """Odd-order permutation counts by M, built by removing the cycle of n+1.

    ``form="direct"`` sums over even ``k >= 2d'`` only; ``form="normalized"``
    sums over every even ``k`` and subtracts the even ``k`` in
    ``[d'-1, 2(d'-1)]``. Both must agree.

    ``empty_weight`` is the count used for the empty remainder when the
    cycle through ``n+1`` uses every letter. It must be 1; 0 is accepted
    only to demonstrate that it breaks the table (p(3, 1) comes out 0).
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if form not in ("direct", "normalized"):
        raise ValueError(f"unknown form {form!r}")
    p = {(1, d): int(d == 0) for d in range(max_d + 1)}

    def rest(m, e):
        if e < 0:
            return 0
        if m == 0:
            return empty_weight if e == 0 else 0
        return p[m, e]

    def term(n, k, dp, d):
        return 2 * comb(n, k) * eulerian(k, dp - 1) * rest(n - k, d - dp)

    for n in range(1, max_n):
        for d in range(max_d + 1):
            total = p[n, d]
            for dp in range(1, d + 1):
                if form == "direct":
                    total += sum(term(n, k, dp, d) for k in range(2 * dp, n + 1, 2))
                else:
                    total += sum(term(n, k, dp, d) for k in range(0, n + 1, 2))
                    lo = dp - 1 + (dp - 1) % 2
                    total -= sum(term(n, k, dp, d)
                                 for k in range(lo, min(2 * (dp - 1), n) + 1, 2))
            p[n + 1, d] = total
    return PTable(max_n, max_d, p)


# -- the parity binomial identity -----------------------------------------

def binomial_sum_direct(n, r, s, c, d, parity="all") -> Fraction:
    """``2 * sum_k C(n,k) C(n-k,r) C(k,s) c^(n-k) d^k``, over all or even ``k``."""
    c, d = Fraction(c), Fraction(d)
    ks = range(0, n + 1, 2) if parity == "even" else range(n + 1)
    return 2 * sum(comb(n, k) * comb(n - k, r) * comb(k, s) * c ** (n - k) * d**k
                   for k in ks)


def binomial_sum_closed(n, r, s, c, d, parity="all") -> Fraction:
    if n < r + s:
        raise DomainError("binomial_sum_closed needs n >= r + s")
    if parity not in ("all", "even"):
        raise ValueError(f"parity must be 'all' or 'even', got {parity!r}")
    c, d = Fraction(c), Fraction(d)
    base = comb(n, r) * comb(n - r, s) * c**r * d**s
    m = n - r - s
    if parity == "all":
        return 2 * base * (c + d) ** m
    return base * ((c + d) ** m + (-1) ** s * (c - d) ** m)


# -- binary strings and f(r, n) -------------------------------------------

def _check_pos(r: str, pos: int):
    if not 1 <= pos <= len(r):
        raise IndexError(f"position {pos} outside 1..{len(r)} for {r!r}")


def peaks(r: str) -> set[int]:
    """1-based positions ``i`` with ``r_i = 1`` and ``i = 1`` or ``r_{i-1} = 0``."""
    return {i + 1 for i, c in enumerate(r) if c == "1" and (i == 0 or r[i - 1] == "0")}


def drop_bit(r: str, pos: int) -> str:
    _check_pos(r, pos)
    return r[:pos - 1] + r[pos:]


def set_bit_one(r: str, pos: int) -> str:
    _check_pos(r, pos)
    return r[:pos - 1] + "1" + r[pos:]


class FRecurrence:
    """Memoized evaluator of f(r, n) by inserting the largest letter.

    Base cases ``n <= len(r) + 1`` come from the enumeration oracle so the
    recurrence never leans on the closed forms it is used to check. UD
    values come from the polynomial table where valid, else the oracle;
    ``sources`` tallies which one was used.
    """

    def __init__(self, **oracle_kw):
        self.memo: dict[tuple[str, int], int] = {}
        self.sources: Counter = Counter()
        self.oracle_kw = oracle_kw

    def ud(self, m: int, r: str) -> int:
        try:
            value = ud_polynomial(r, m)
            self.sources["ud:polynomial"] += 1
        except (UnsupportedString, DomainError):
            value = oracle.count_ud(m, r, **self.oracle_kw)
            self.sources["ud:oracle"] += 1
        return value

    def __call__(self, r: str, n: int) -> int:
        if not r or set(r) - {"0", "1"} or r[-1] != "0":
            raise ValueError(f"f(r, n) needs a binary r ending in 0, got {r!r}")
        if n < 2:
            raise ValueError("f(r, n) recurrence needs n >= 2")
        key = (r, n)
        if key in self.memo:
            return self.memo[key]
        k = len(r)
        if n <= k + 1:
            value = oracle.count_f(r, n, **self.oracle_kw)
            self.sources["f:oracle-base"] += 1
        else:
            m = n - 1
            value = 2 * self(r, m) + (m - k) * self.ud(m, r) + self.ud(m, set_bit_one(r, k))
            for i in sorted(peaks(r)):
                if i == 1:
                    value += self(drop_bit(r, 1), m)
                else:
                    value += self(drop_bit(r, i - 1), m) + self(drop_bit(r, i), m)
        self.memo[key] = value
        return value


def f_recurrence(r: str, n: int) -> int:
    return FRecurrence()(r, n)


# -- b(n, d, k) -----------------------------------------------------------

@dataclass
class BTable:
    """Ballot permutations by size, descents and last letter.

    Only ``0 <= d <= (n-1)//2`` is stored; :meth:`get` returns 0 elsewhere.
    """

    max_n: int
    values: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def get(self, n: int, d: int, k: int) -> int:
        return self.values.get((n, d, k), 0)

    def max_d(self, n: int) -> int:
        return (n - 1) // 2

    def row_sum(self, n: int, k: int) -> int:
        return sum(self.get(n, d, k) for d in range(self.max_d(n) + 1))

    def col_sum(self, n: int, d: int) -> int:
        return sum(self.get(n, d, k) for k in range(1, n + 1))

    def total(self, n: int) -> int:
        return sum(self.col_sum(n, d) for d in range(self.max_d(n) + 1))

    def as_count_table(self, n: int | None = None) -> CountTable:
        keys = sorted(k for k in self.values if n is None or k[0] == n)
        return CountTable(("n", "k", "d"),
                          {(a, k, d): self.values[a, d, k] for a, d, k in keys})


def bndk_table(max_n: int) -> BTable:
    """Fill b(n, d, k) by deleting the last letter and standardizing."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    t = BTable(max_n, {(1, 0, 1): 1})
    for n in range(2, max_n + 1):
        for d in range((n - 1) // 2 + 1):
            below = [t.get(n - 1, d, j) for j in range(1, n)]
            below_less = [t.get(n - 1, d - 1, j) for j in range(1, n)]
            for k in range(1, n + 1):
                # last step descends from k' >= k (d-1 before) or ascends from k' < k
                t.values[n, d, k] = sum(below_less[k - 1:]) + sum(below[:k - 1])
    return t


def col1_formula(n: int, k: int) -> int:
    """b(n, 1, k) for n >= 2."""
    if n < 2:
        raise DomainError("col1_formula needs n >= 2")
    if not 1 <= k <= n:
        raise DomainError(f"k must be in 1..{n}")
    if k <= n - 2:
        return 2 ** (k - 1)
    if k == n - 1:
        return 2 ** (n - 2) - 1
    return 2 ** (n - 1) - 2 * n + 2


def col2_formula(n: int, k: int) -> int:
    """b(n, 2, k) for n >= 5."""
    if n < 5:
        raise DomainError("col2_formula needs n >= 5")
    if not 1 <= k <= n:
        raise DomainError(f"k must be in 1..{n}")
    two = Fraction(2)
    if k <= n - 4:
        v = two ** (n - k) * 3 ** (k - 1) - (4 * n - k - 3) * two ** (k - 2)
    elif k == n - 3:
        v = 8 * 3 ** (n - 4) - 3 * n * two ** (n - 5) - 2
    elif k == n - 2:
        v = 4 * 3 ** (n - 3) - (3 * n - 1) * two ** (n - 4) - 2 * n + 7
    elif k == n - 1:
        v = 2 * 3 ** (n - 2) - (3 * n - 2) * two ** (n - 3) - 2 * comb(n + 1, 2) + 8 * n - 10
    else:
        v = (3 ** (n - 1) - (3 * n - 3) * two ** (n - 2) - 2 * comb(n + 2, 3)
             + 10 * comb(n + 1, 2) - 14 * n + 5)
    return exact_int(v)
