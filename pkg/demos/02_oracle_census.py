"""
Brute-force census of S_n
=========================

The oracle enumerates S_n in numpy blocks and keeps two histograms: words by
(index, last letter) and permutations by (M, odd order, single cycle).
Every count below is read off those histograms.
"""

import time

import numpy as np

from ballot_oop import oracle as O

n = 9
start = time.perf_counter()
census = O.census(n)
print(f"S_{n}: {census.total()} permutations in {time.perf_counter() - start:.2f}s")
print("word histogram shape:", census.word.shape, " cycle histogram shape:", census.cycles.shape)

# The same histograms come out of a plain one-permutation-at-a-time loop.
small = 6
assert np.array_equal(O.Census.compute(small).word, O.Census.from_stream(small).word)

# Ballot words by descents next to odd-order permutations by M.
print(" n | b(n,d)                      | p(n,d)")
for m in range(1, n + 1):
    top = (m - 1) // 2 + 1
    b = [O.count_ballot(m, d) for d in range(top)]
    p = [O.count_oop(m, d) for d in range(top)]
    print(f"{m:2d} | {str(b):27s} | {p}  {'equal' if b == p else 'DIFFERENT'}")

# A finer statistic: last letter k of ballot words with d descents.
print("b(7, d, k) rows k = 1..7:")
for k in range(1, 8):
    print(k, [O.count_ballot_last(7, d, k) for d in range(4)])
