"""Explicit bijections between ballot words and odd-order permutations.

* :func:`phi_d1` / :func:`psi_d1`: ballot words with one descent versus
  odd-order permutations with M = 1, via consecutive runs.
* :func:`phi_max` / :func:`psi_max`: ballot words of size 2n+1 with n
  descents versus (2n+1)-cycles with M = n, via rotation.
* :func:`reversal_map`: word reversal, moving (descents, T) to
  (n-1-d, t+2d-n+1).
* :func:`dyck_split`: the unique factorization of a word in
  S(2n, n-1, 0) or S(2n, n, -1) into two Dyck words.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from . import perm as P
from .formulas import eulerian_catalan, dyck_pair_total
from .perm import CycleDecomposition, Permutation


class DomainViolation(ValueError):
    """Input lies outside the domain of a map; the message names the failed check."""


def _runs(word) -> list[tuple[int, ...]]:
    """Split into maximal consecutive runs (a, a+1, a+2, ...)."""
    out = []
    for x in word:
        if out and x == out[-1][-1] + 1:
            out[-1] = out[-1] + (x,)
        else:
            out.append((x,))
    return out


@dataclass(frozen=True)
class RunDecomposition:
    """``x d y z`` split of a one-descent ballot word with 1 in ``x``.

    ``x_runs`` are the maximal consecutive runs of ``x d``; ``y_runs[i]``
    holds the letters strictly between ``x_runs[i]`` and ``x_runs[i+1]``.
    """

    x_runs: tuple[tuple[int, ...], ...]
    y_runs: tuple[tuple[int, ...], ...]
    tail: tuple[int, ...]
    descent_letter: int

    def cycle(self) -> tuple[int, ...]:
        out = []
        for xr, yr in zip(self.x_runs, self.y_runs):
            out += [xr[-1], yr[-1]]
        out.append(self.x_runs[-1][-1])
        return tuple(out)


def _split_xdyz(word: tuple[int, ...]):
    """``(x, d, y, z)`` for a word with a single descent."""
    n = len(word)
    j = next(i for i in range(n - 1) if word[i] > word[i + 1])
    d = word[j]
    x, rest = word[:j], word[j + 1:]
    z = tuple(range(d + 1, n + 1))
    if rest[len(rest) - len(z):] != z:
        raise DomainViolation(f"suffix after {d} does not end in {d + 1}..{n}")
    y = rest[:len(rest) - len(z)]
    return x, d, y, z


def _swap(word: tuple[int, ...]) -> tuple[int, ...]:
    x, d, y, z = _split_xdyz(word)
    return y + (d,) + x + z


def _require_d1_ballot(p: Permutation):
    if not P.is_ballot(p):
        raise DomainViolation(f"{p} is not ballot")
    if P.descent_count(p) != 1:
        raise DomainViolation(f"{p} has {P.descent_count(p)} descents, need exactly 1")


def run_decomposition(p: Permutation) -> RunDecomposition:
    _require_d1_ballot(p)
    x, d, y, z = _split_xdyz(p.letters)
    if 1 not in x:
        raise DomainViolation(f"letter 1 of {p} is not in the part before the descent")
    x_runs = _runs(x + (d,))
    ys = set(y)
    y_runs = []
    for a, b in zip(x_runs, x_runs[1:]):
        y_runs.append(tuple(v for v in range(a[-1] + 1, b[0]) if v in ys))
    return RunDecomposition(tuple(x_runs), tuple(y_runs), z, d)


def phi_d1(p: Permutation) -> CycleDecomposition:
    """Map a ballot word with one descent to an odd-order permutation with M = 1."""
    _require_d1_ballot(p)
    x, d, y, z = _split_xdyz(p.letters)
    if 1 in x:
        return P.from_cycles([run_decomposition(p).cycle()], p.n)
    return P.reverse_cycles(phi_d1(Permutation(_swap(p.letters))))


def psi_d1(c: CycleDecomposition) -> Permutation:
    """Inverse of :func:`phi_d1`."""
    if not P.is_odd_order(c):
        raise DomainViolation(f"{c} is not of odd order")
    big = c.nontrivial()
    if len(big) != 1:
        raise DomainViolation(f"{c} has {len(big)} nontrivial cycles, need exactly 1")
    if P.m_statistic(c) != 1:
        raise DomainViolation(f"{c} has M = {P.m_statistic(c)}, need 1")
    cyc = big[0]
    if not P.cycle_stats(cyc).mostly_increasing:
        return Permutation(_swap(psi_d1(P.reverse_cycles(c)).letters))
    # min-first rotation of a cycle with one cyclic descent is increasing
    peaks_ = cyc[0::2]
    valleys = cyc[1::2]
    x_parts, y_parts = [], []
    prev_y = 0
    for i, xp in enumerate(peaks_):
        x_parts += range(prev_y + 1, xp + 1)
        if i < len(valleys):
            y_parts += range(xp + 1, valleys[i] + 1)
            prev_y = valleys[i]
    d = peaks_[-1]
    return Permutation(tuple(x_parts + y_parts) + tuple(range(d + 1, c.n + 1)))


def phi_max(p: Permutation) -> CycleDecomposition:
    """Read a ballot word of size 2n+1 with n descents as a single cycle."""
    if p.n % 2 == 0:
        raise DomainViolation(f"size {p.n} is even, need odd size 2n+1")
    if not P.is_ballot(p):
        raise DomainViolation(f"{p} is not ballot")
    if P.descent_count(p) != (p.n - 1) // 2:
        raise DomainViolation(
            f"{p} has {P.descent_count(p)} descents, need {(p.n - 1) // 2}")
    return P.from_cycles([p.letters], p.n)


def psi_max(c: CycleDecomposition) -> Permutation:
    """The unique rotation of a maximal-M cycle that is ballot with n descents."""
    if len(c.cycles) != 1 or c.n % 2 == 0:
        raise DomainViolation(f"{c} is not a single cycle of odd length")
    half = (c.n - 1) // 2
    if P.m_statistic(c) != half:
        raise DomainViolation(f"{c} has M = {P.m_statistic(c)}, need {half}")
    cyc = c.cycles[0]
    hits = []
    for i in range(len(cyc)):
        w = cyc[i:] + cyc[:i]
        if P.descent_count(w) == half and P.is_ballot(w):
            hits.append(w)
    if len(hits) != 1:
        raise AssertionError(f"{c}: {len(hits)} ballot rotations with {half} descents")
    return Permutation(hits[0])


def reversal_map(p: Permutation) -> Permutation:
    """Word reversal; sends S(n, d, t) onto S(n, n-1-d, t+2d-n+1)."""
    return P.reverse_word(p)


def reversal_target(n: int, d: int, t: int) -> tuple[int, int, int]:
    return n, n - 1 - d, t + 2 * d - n + 1


@dataclass(frozen=True)
class DyckSplit:
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def split_index(self) -> int:
        return len(self.left)


def dyck_split(p: Permutation) -> DyckSplit:
    """Cut a word of S(2n, n-1, 0) or S(2n, n, -1) into two Dyck words."""
    if p.n % 2:
        raise DomainViolation(f"size {p.n} is odd, need even size 2n")
    half = p.n // 2
    des, t = P.descent_count(p), P.t_statistic(p)
    sums = P.prefix_sums(p)
    if (des, t) == (half - 1, 0):
        k = max(j for j in range(1, p.n + 1) if sums[j - 1] == 0)
    elif (des, t) == (half, -1):
        k = min(j for j in range(1, p.n) if sums[j] == -1)
    else:
        raise DomainViolation(
            f"{p} has (descents, T) = ({des}, {t}); need ({half - 1}, 0) or ({half}, -1)")
    return DyckSplit(p.letters[:k], p.letters[k:])


def dyck_words(letters) -> list[tuple[int, ...]]:
    return [w for w in permutations(sorted(letters)) if P.is_dyck_word(w)]


@dataclass
class VerificationFinding:
    claim: str
    confirmed: bool
    lhs: object
    rhs: object
    detail: str = ""


def dyck_count_check(n: int) -> list[VerificationFinding]:
    """Check the two-Dyck-word construction at size 2n by brute force.

    Claims: Dyck words on any k letters number EC((k-1)/2); the construction
    hits S(2n, n-1, 0) and S(2n, n, -1) exactly once each; and the two
    classes have equal size.
    """
    size = 2 * n
    findings = []
    for k in range(1, size + 1, 2):
        # Dyck-ness depends only on relative order; also try a spread-out alphabet.
        plain = len(dyck_words(range(1, k + 1)))
        spread = len(dyck_words(range(3, 3 * k + 3, 3)))
        ok = plain == spread == eulerian_catalan((k - 1) // 2)
        findings.append(VerificationFinding(
            f"dyck-count k={k}", ok, plain, eulerian_catalan((k - 1) // 2)))

    shapes = {}
    for k in range(1, size, 2):
        for left_set in combinations(range(1, size + 1), k):
            right_set = sorted(set(range(1, size + 1)) - set(left_set))
            lefts = dyck_words(left_set)
            rights = dyck_words(right_set)
            for a in lefts:
                for b in rights:
                    shapes[a + b] = shapes.get(a + b, 0) + 1
    n_made = sum(shapes.values())
    unique = all(v == 1 for v in shapes.values())
    classes = {"zero": 0, "minus": 0, "other": 0}
    for w in shapes:
        stat = (P.descent_count(w), P.t_statistic(w))
        if stat == (n - 1, 0):
            classes["zero"] += 1
        elif stat == (n, -1):
            classes["minus"] += 1
        else:
            classes["other"] += 1
    target = 0
    split_ok = True
    for w in permutations(range(1, size + 1)):
        stat = (P.descent_count(w), P.t_statistic(w))
        if stat in ((n - 1, 0), (n, -1)):
            target += 1
            if w not in shapes:
                split_ok = False
            else:
                s = dyck_split(Permutation(w))
                split_ok &= s.left + s.right == w and P.is_dyck_word(s.left) \
                    and P.is_dyck_word(s.right)
    findings.append(VerificationFinding(
        "construction-bijective", unique and classes["other"] == 0 and split_ok
        and n_made == target, n_made, target,
        f"outputs={n_made} distinct={len(shapes)} outside={classes['other']}"))
    findings.append(VerificationFinding(
        "classes-equal", classes["zero"] == classes["minus"],
        classes["zero"], classes["minus"]))
    findings.append(VerificationFinding(
        "pair-sum", dyck_pair_total(n) == n_made, dyck_pair_total(n), n_made,
        "sum_k C(2n,k) EC EC versus constructed words"))
    return findings


__all__ = [
    "DomainViolation", "RunDecomposition", "run_decomposition", "phi_d1", "psi_d1",
    "phi_max", "psi_max", "reversal_map", "reversal_target", "DyckSplit", "dyck_split",
    "dyck_words", "dyck_count_check", "VerificationFinding",
]
