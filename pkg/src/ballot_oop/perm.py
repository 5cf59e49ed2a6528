"""Permutations, cycle decompositions, and the word/cycle statistics on them.

Permutations are one-line words over ``1..n``. Positions in messages are
1-based. Signatures are tuples of ``+1``/``-1``; indexes are ``'0'``/``'1'``
strings with a ``1`` at every descent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence


class PermutationError(ValueError):
    """Raised for malformed permutations or cycle decompositions."""


@dataclass(frozen=True, order=True)
class Permutation:
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(letters)
        if n < 1:
            raise PermutationError("a permutation needs at least one letter")
        if sorted(letters) != list(range(1, n + 1)):
            raise PermutationError(
                f"{format_word(letters)} is not a rearrangement of 1..{n}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"1 4 3 5 2"``, ``"1,4,3,5,2"`` or the compact ``"14352"``.

        The compact form is only accepted for n <= 9.
        """
        text = text.strip()
        if re.fullmatch(r"\d+", text):
            return cls(tuple(int(c) for c in text))
        parts = [p for p in re.split(r"[\s,]+", text) if p]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            if isinstance(exc, PermutationError):
                raise
            raise PermutationError(f"cannot parse permutation {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return format_word(self.letters)


def format_word(word: Sequence[int], sep: str = " ") -> str:
    return sep.join(str(x) for x in word)


def _word(w) -> tuple[int, ...]:
    return w.letters if isinstance(w, Permutation) else tuple(w)


# -- word statistics ------------------------------------------------------

def updown_signature(w) -> tuple[int, ...]:
    """+1 at each weak ascent ``w_i <= w_{i+1}``, -1 at each descent."""
    w = _word(w)
    return tuple(1 if a <= b else -1 for a, b in zip(w, w[1:]))


def index_of(w) -> str:
    return "".join("1" if q < 0 else "0" for q in updown_signature(w))


def signature_of_index(r: str) -> tuple[int, ...]:
    return tuple(-1 if c == "1" else 1 for c in r)


def ascent_count(w) -> int:
    return sum(1 for q in updown_signature(w) if q > 0)


def descent_count(w) -> int:
    return sum(1 for q in updown_signature(w) if q < 0)


def prefix_sums(w) -> list[int]:
    """``[T_0, T_1, ..., T_{n-1}]`` with ``T_0 = 0``."""
    return [0, *accumulate(updown_signature(w))]


def is_ballot(w) -> bool:
    return min(prefix_sums(w)) >= 0


def t_statistic(w) -> int:
    return min(prefix_sums(w))


def is_dyck_word(w) -> bool:
    """Distinct letters whose signature never dips below 0 and ends at 0."""
    sums = prefix_sums(w)
    return min(sums) >= 0 and sums[-1] == 0


def reverse_word(p: Permutation) -> Permutation:
    return Permutation(tuple(reversed(p.letters)))


# -- cycles ---------------------------------------------------------------

def _rotate_min_first(cycle: Sequence[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles covering ``1..n`` in canonical form.

    Each cycle starts at its minimum and cycles are sorted by minimum, so two
    decompositions of the same permutation compare equal. ``(c1, c2, ...)``
    maps ``c1 -> c2 -> ... -> c1``.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cycles = [tuple(int(x) for x in c) for c in self.cycles]
        if any(len(c) == 0 for c in cycles):
            raise PermutationError("empty cycle")
        seen = [x for c in cycles for x in c]
        n = len(seen)
        if len(set(seen)) != n:
            raise PermutationError("cycles are not disjoint")
        if set(seen) != set(range(1, n + 1)):
            raise PermutationError(f"cycles do not cover 1..{n}")
        canon = tuple(sorted((_rotate_min_first(c) for c in cycles),
                             key=lambda c: c[0]))
        object.__setattr__(self, "cycles", canon)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "CycleDecomposition":
        """Parse ``"(1,3,9)(4,2,8,5,6)(7)"``.

        Missing fixed points are filled in up to ``n`` (default: the largest
        letter written); ``""`` or ``"()"`` with ``n`` is the identity.
        """
        if text.replace(" ", "") in ("", "()") and n is not None:
            return from_cycles([], n)
        groups = re.findall(r"\(([^()]*)\)", text)
        if not groups or re.sub(r"\([^()]*\)|\s", "", text):
            raise PermutationError(f"cannot parse cycle notation {text!r}")
        try:
            cycles = [tuple(int(x) for x in re.split(r"[\s,]+", g.strip()) if x)
                      for g in groups]
        except ValueError:
            raise PermutationError(f"cannot parse cycle notation {text!r}") from None
        return from_cycles(cycles, n)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def nontrivial(self) -> list[tuple[int, ...]]:
        return [c for c in self.cycles if len(c) > 1]

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


def from_cycles(cycles: Iterable[Sequence[int]], n: int | None = None) -> CycleDecomposition:
    cycles = [tuple(c) for c in cycles]
    written = {x for c in cycles for x in c}
    if n is None:
        n = max(written, default=0)
    if any(x < 1 or x > n for x in written):
        raise PermutationError(f"cycle letters must lie in 1..{n}")
    cycles += [(x,) for x in range(1, n + 1) if x not in written]
    return CycleDecomposition(tuple(cycles))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    w = p.letters
    seen = [False] * (len(w) + 1)
    cycles = []
    for start in range(1, len(w) + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = w[x - 1]
        cycles.append(tuple(cyc))
    return CycleDecomposition(tuple(cycles))


def to_permutation(d: CycleDecomposition) -> Permutation:
    image = [0] * d.n
    for c in d.cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            image[a - 1] = b
    return Permutation(tuple(image))


@dataclass(frozen=True)
class CycleStats:
    cyclic_ascents: int
    cyclic_descents: int

    @property
    def m_value(self) -> int:
        return min(self.cyclic_ascents, self.cyclic_descents)

    @property
    def mostly_increasing(self) -> bool:
        return self.cyclic_ascents >= self.cyclic_descents


def cycle_stats(cycle: Sequence[int]) -> CycleStats:
    # A fixed point compares c <= c, which is an ascent.
    cycle = tuple(cycle)
    wrapped = cycle + cycle[:1]
    asc = sum(1 for a, b in zip(wrapped, wrapped[1:]) if a <= b)
    return CycleStats(asc, len(cycle) - asc)


def m_statistic(d: CycleDecomposition) -> int:
    return sum(cycle_stats(c).m_value for c in d.cycles)


def is_odd_order(d: CycleDecomposition) -> bool:
    return all(len(c) % 2 == 1 for c in d.cycles)


def reverse_cycles(d: CycleDecomposition) -> CycleDecomposition:
    return CycleDecomposition(tuple(tuple(reversed(c)) for c in d.cycles))
