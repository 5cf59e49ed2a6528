"""
Bijections between ballot words and odd-order permutations
==========================================================
"""

from collections import Counter

from ballot_oop import bijections as BJ
from ballot_oop import oracle as O
from ballot_oop import perm as P
from ballot_oop.perm import CycleDecomposition, Permutation

# One descent: consecutive runs of the word become the maxima of one cycle.
w = Permutation.parse("125783469")
c = BJ.phi_d1(w)
print(w, "->", c, "->", BJ.psi_d1(c))
print(BJ.run_decomposition(w))

# When 1 sits after the descent the word is swapped first and the cycle reversed.
w2 = Permutation.parse("346812579")
print(w2, "->", BJ.phi_d1(w2))

# Round trip over all of B(9, 1).
words = [p for p in O.enumerate_sn(9) if P.descent_count(p) == 1 and P.is_ballot(p)]
assert all(BJ.psi_d1(BJ.phi_d1(p)) == p for p in words)
print(len(words), "words of B(9,1) round-trip")

# Maximal descents: read the word as one cycle; exactly one rotation comes back.
c = CycleDecomposition.parse("(1,4,3,5,2)")
print(c, "->", BJ.psi_max(c), "->", BJ.phi_max(BJ.psi_max(c)))

# Reversal moves (d, T) to (n-1-d, T+2d-n+1).
moves = Counter()
for p in O.enumerate_sn(5):
    q = BJ.reversal_map(p)
    moves[(P.descent_count(p), P.t_statistic(p)), (P.descent_count(q), P.t_statistic(q))] += 1
for (src, dst), k in sorted(moves.items()):
    print(src, "->", dst, k)

# Words of S(2n, n-1, 0) and S(2n, n, -1) split into two Dyck words.
for text in ("1324", "2143", "132546"):
    s = BJ.dyck_split(Permutation.parse(text))
    print(text, "=", s.left, "+", s.right)
for f in BJ.dyck_count_check(3):
    print(f.claim, f.confirmed, f.lhs, f.rhs)
