"""Independent brute-force helpers, written directly from the definitions.

They share no code with the package so that tests compare two separate
implementations.
"""

from functools import lru_cache
from itertools import permutations

import pytest


def sig(w):
    return [1 if a <= b else -1 for a, b in zip(w, w[1:])]


def sums(w):
    out, acc = [0], 0
    for s in sig(w):
        acc += s
        out.append(acc)
    return out


def ballot(w):
    return min(sums(w)) >= 0


def descents(w):
    return sum(1 for a, b in zip(w, w[1:]) if a > b)


def cycles_of(w):
    seen, out = set(), []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = w[x - 1]
        out.append(cyc)
    return out


def cycle_m(c):
    wrapped = list(c) + [c[0]]
    up = sum(1 for a, b in zip(wrapped, wrapped[1:]) if a <= b)
    return min(up, len(c) - up)


def m_of(w):
    return sum(cycle_m(c) for c in cycles_of(w))


def odd_order(w):
    return all(len(c) % 2 for c in cycles_of(w))


@lru_cache(maxsize=None)
def sn(n):
    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def brute_b(n, d):
    return sum(1 for w in sn(n) if descents(w) == d and ballot(w))


@lru_cache(maxsize=None)
def brute_p(n, d):
    return sum(1 for w in sn(n) if odd_order(w) and m_of(w) == d)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("BALLOT_OOP_CACHE_DIR", str(tmp_path))
    return tmp_path


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
    for note in mod.NOTES:
        terminalreporter.write_line("note: " + note)
