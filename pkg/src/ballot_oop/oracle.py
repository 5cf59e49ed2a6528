"""Brute-force enumeration of S_n and the ground-truth counts built on it.

Two enumeration paths exist. :func:`enumerate_sn` streams
:class:`~ballot_oop.perm.Permutation` objects in lexicographic order via the
classical successor step; :func:`census` walks S_n in numpy blocks (one
block per fixed prefix) and records two histograms per size:

* ``word[mask, k-1]``: permutations with descent mask ``mask`` (bit ``i``
  set when position ``i+1`` is a descent) and last letter ``k``;
* ``cycles[m, odd, full]``: permutations with M statistic ``m``, split by
  whether all cycles are odd and whether it is a single n-cycle.

Every word statistic used here (descents, ballot, T, first step, index)
is a function of the descent mask, so the counting functions below are
sums over these histograms. :meth:`Census.from_stream` rebuilds the same
histograms one permutation at a time with the functions in
:mod:`ballot_oop.perm`; the two are compared in the test-suite.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _itperms
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from . import perm as P

log = logging.getLogger(__name__)

DEFAULT_LIMIT = 12
_BLOCK_FREE = 9  # letters left free inside one numpy block (9! rows)


class EnumerationLimitError(ValueError):
    """Requested n is above the enumeration cap."""


def check_n(n: int, limit: int | None):
    limit = DEFAULT_LIMIT if limit is None else limit
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise EnumerationLimitError(
            f"n = {n} exceeds the enumeration limit {limit} ({factorial(n)} permutations)")


# -- streaming enumeration ------------------------------------------------

def next_permutation(a: list[int]) -> bool:
    """Advance ``a`` in place to its lexicographic successor.

    Returns False (leaving ``a`` untouched) when ``a`` is the last one.
    """
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def prefixes(n: int, length: int) -> list[tuple[int, ...]]:
    """All length-``length`` prefixes of words in S_n, in lexicographic order."""
    return list(_itperms(range(1, n + 1), length))


def enumerate_sn(n: int, prefix: Sequence[int] = (), limit: int | None = None
                 ) -> Iterator[P.Permutation]:
    """Yield every permutation of S_n that starts with ``prefix``, lexicographically.

    Disjoint prefixes of a common length partition S_n, which is how the
    work is split between processes.
    """
    check_n(n, limit)
    prefix = list(prefix)
    if len(set(prefix)) != len(prefix) or any(not 1 <= x <= n for x in prefix):
        raise ValueError(f"invalid prefix {prefix} for n = {n}")
    tail = sorted(set(range(1, n + 1)) - set(prefix))
    while True:
        yield P.Permutation(tuple(prefix + tail))
        if not next_permutation(tail):
            return


# -- block enumeration ----------------------------------------------------

@lru_cache(maxsize=None)
def _lex_indices(m: int) -> np.ndarray:
    """All permutations of ``0..m-1`` in lexicographic order, shape (m!, m)."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int8)
    sub = _lex_indices(m - 1)
    parts = []
    for v in range(m):
        rest = sub + (sub >= v)
        parts.append(np.hstack([np.full((len(sub), 1), v, dtype=np.int8), rest]))
    out = np.vstack(parts).astype(np.int8)
    out.setflags(write=False)
    return out


def permutation_block(n: int, prefix: Sequence[int] = ()) -> np.ndarray:
    """All words of S_n with the given prefix as an int8 array of letters 1..n."""
    tail = np.array(sorted(set(range(1, n + 1)) - set(prefix)), dtype=np.int8)
    idx = _lex_indices(len(tail))
    head = np.broadcast_to(np.array(prefix, dtype=np.int8), (len(idx), len(prefix)))
    return np.hstack([head, tail[idx]])


def _block_histograms(n: int, prefix: tuple[int, ...]):
    a = permutation_block(n, prefix).astype(np.int64) - 1
    rows = len(a)

    desc = a[:, :-1] > a[:, 1:]
    weights = np.left_shift(1, np.arange(n - 1, dtype=np.int64))
    mask = desc.astype(np.int64) @ weights
    word = np.bincount(mask * n + a[:, -1], minlength=(1 << (n - 1)) * n)

    # Cycle labels by pointer doubling: label = min element of the cycle.
    lab = np.broadcast_to(np.arange(n, dtype=np.int64), a.shape).copy()
    ptr = a.copy()
    steps = 1
    while steps < n:
        lab = np.minimum(lab, np.take_along_axis(lab, ptr, axis=1))
        ptr = np.take_along_axis(ptr, ptr, axis=1)
        steps *= 2
    flat = (np.arange(rows, dtype=np.int64)[:, None] * n + lab).ravel()
    size = np.bincount(flat, minlength=rows * n).reshape(rows, n)
    # sigma(i) >= i is a cyclic ascent (fixed points included).
    up = (a >= np.arange(n)).ravel()
    asc = np.bincount(flat[up], minlength=rows * n).reshape(rows, n)
    m = np.minimum(asc, size - asc).sum(axis=1)
    odd = np.all((size % 2 == 1) | (size == 0), axis=1)
    full = size.max(axis=1) == n
    key = m * 4 + odd * 2 + full
    cyc = np.bincount(key, minlength=(n // 2 + 1) * 4)
    return word, cyc


def _block_job(args):
    return _block_histograms(*args)


@dataclass
class Census:
    n: int
    word: np.ndarray     # (2**(n-1), n), object dtype of Python ints
    cycles: np.ndarray   # (n//2 + 1, 2, 2), object dtype of Python ints

    @classmethod
    def compute(cls, n: int, jobs: int | None = 1, limit: int | None = None) -> "Census":
        check_n(n, limit)
        plen = max(0, n - _BLOCK_FREE)
        tasks = [(n, pre) for pre in prefixes(n, plen)]
        if jobs is None:
            jobs = os.cpu_count() or 1
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                results = list(ex.map(_block_job, tasks))
        else:
            results = map(_block_job, tasks)
        word = np.zeros((1 << (n - 1)) * n, dtype=object)
        cyc = np.zeros((n // 2 + 1) * 4, dtype=object)
        for w, c in results:
            word += w.astype(object)
            cyc += c.astype(object)
        return cls(n, word.reshape(1 << (n - 1), n), cyc.reshape(n // 2 + 1, 2, 2))

    @classmethod
    def from_stream(cls, n: int, limit: int | None = None) -> "Census":
        """Same histograms, one :class:`Permutation` at a time (slow; small n)."""
        word = np.zeros((1 << (n - 1), n), dtype=object)
        cyc = np.zeros((n // 2 + 1, 2, 2), dtype=object)
        for p in enumerate_sn(n, limit=limit):
            word[int(P.index_of(p)[::-1] or "0", 2), p[-1] - 1] += 1
            d = P.cycle_decomposition(p)
            cyc[P.m_statistic(d), int(P.is_odd_order(d)), int(len(d.cycles) == 1)] += 1
        return cls(n, word, cyc)

    def total(self) -> int:
        return int(self.word.sum())


_CENSUS: dict[int, Census] = {}


def census(n: int, jobs: int | None = 1, limit: int | None = None) -> Census:
    """Memoized :meth:`Census.compute`; results do not depend on ``jobs``."""
    if n not in _CENSUS:
        log.info("enumerating S_%d", n)
        _CENSUS[n] = Census.compute(n, jobs=jobs, limit=limit)
    return _CENSUS[n]


@lru_cache(maxsize=None)
def _mask_table(n: int):
    """Per-mask (descents, T statistic, starts-with-descent)."""
    out = []
    for mask in range(1 << (n - 1)):
        t = low = 0
        for i in range(n - 1):
            t += -1 if mask >> i & 1 else 1
            low = min(low, t)
        out.append((bin(mask).count("1"), low, mask & 1))
    return out


def mask_of_index(r: str) -> int:
    return int(r[::-1], 2) if r else 0


# -- counts ---------------------------------------------------------------

def _word_counts(n, keep, **kw) -> int:
    c = census(n, **kw)
    return sum(int(c.word[mask].sum())
               for mask, stats in enumerate(_mask_table(n)) if keep(*stats))


def count_descents(n: int, d: int, **kw) -> int:
    return _word_counts(n, lambda des, t, first: des == d, **kw)


def count_ballot(n: int, d: int, **kw) -> int:
    return _word_counts(n, lambda des, t, first: des == d and t == 0, **kw)


def count_by_t(n: int, d: int, t: int, **kw) -> int:
    return _word_counts(n, lambda des, low, first: des == d and low == t, **kw)


def count_ascent_start(n: int, d: int, **kw) -> int:
    if n < 2:
        raise ValueError("count_ascent_start needs n >= 2")
    return _word_counts(n, lambda des, t, first: des == d and not first, **kw)


def count_descent_start(n: int, d: int, **kw) -> int:
    if n < 2:
        raise ValueError("count_descent_start needs n >= 2")
    return _word_counts(n, lambda des, t, first: des == d and first, **kw)


def count_ballot_last(n: int, d: int, k: int, **kw) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"last letter k must be in 1..{n}")
    c = census(n, **kw)
    return sum(int(c.word[mask, k - 1])
               for mask, (des, t, _) in enumerate(_mask_table(n)) if des == d and t == 0)


def _cycle_count(n, d, odd=None, full=None, **kw) -> int:
    c = census(n, **kw)
    if not 0 <= d < c.cycles.shape[0]:
        return 0
    sel = c.cycles[d]
    if odd is not None:
        sel = sel[int(odd)][None]
    if full is not None:
        sel = sel[:, int(full)]
    return int(sel.sum())


def count_oop(n: int, d: int, **kw) -> int:
    return _cycle_count(n, d, odd=True, **kw)


def count_cycles_m(n: int, d: int, **kw) -> int:
    return _cycle_count(n, d, full=True, **kw)


def count_ud(n: int, r: str, **kw) -> int:
    """Permutations of S_n whose index is ``r`` followed by zeros."""
    if set(r) - {"0", "1"}:
        raise ValueError(f"not a binary string: {r!r}")
    if len(r) > n - 1:
        raise ValueError(f"UD(n, r) needs len(r) <= n - 1, got len {len(r)} with n = {n}")
    return int(census(n, **kw).word[mask_of_index(r)].sum())


def count_f(r: str, n: int, **kw) -> int:
    """Permutations of S_n whose index is ``r`` followed by a suffix with one 1.

    Zero when ``len(r) >= n - 1``: the suffix is empty or absent.
    """
    if not r or set(r) - {"0", "1"}:
        raise ValueError(f"not a binary string: {r!r}")
    if r[-1] != "0":
        raise ValueError(f"f(r, n) needs r ending in 0, got {r!r}")
    if len(r) >= n - 1:
        return 0
    c = census(n, **kw)
    head = mask_of_index(r)
    return sum(int(c.word[head | (1 << i)].sum()) for i in range(len(r), n - 1))


# -- tables ---------------------------------------------------------------

@dataclass
class CountTable:
    """Exact counts keyed by parameter tuples, e.g. ``("n", "d")``."""

    params: tuple[str, ...]
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries[key]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*self.params, "count"])
        for key in sorted(self.entries):
            w.writerow([*key, str(self.entries[key])])
        return buf.getvalue()

    def to_json(self) -> str:
        rows = [dict(zip(self.params, key), count=str(self.entries[key]))
                for key in sorted(self.entries)]
        return json.dumps({"params": list(self.params), "entries": rows}, indent=1)

    @classmethod
    def from_csv(cls, text: str) -> "CountTable":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header[-1] != "count":
            raise ValueError("last CSV column must be 'count'")
        table = cls(tuple(header[:-1]))
        for row in reader:
            table.entries[tuple(int(x) for x in row[:-1])] = int(row[-1])
        return table

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        obj = json.loads(text)
        table = cls(tuple(obj["params"]))
        for row in obj["entries"]:
            table.entries[tuple(int(row[p]) for p in table.params)] = int(row["count"])
        return table


def ballot_table(max_n: int, max_d: int, **kw) -> CountTable:
    t = CountTable(("n", "d"))
    for n in range(1, max_n + 1):
        for d in range(max_d + 1):
            t.entries[n, d] = count_ballot(n, d, **kw)
    return t


def oop_table(max_n: int, max_d: int, **kw) -> CountTable:
    t = CountTable(("n", "d"))
    for n in range(1, max_n + 1):
        for d in range(max_d + 1):
            t.entries[n, d] = count_oop(n, d, **kw)
    return t


def ballot_last_table(n: int, **kw) -> CountTable:
    t = CountTable(("n", "k", "d"))
    for k in range(1, n + 1):
        for d in range((n - 1) // 2 + 1):
            t.entries[n, k, d] = count_ballot_last(n, d, k, **kw)
    return t
