"""
Descents, ballot words and the T statistic
==========================================

A short tour of the word and cycle statistics on a few small permutations.
"""

from ballot_oop import perm as P
from ballot_oop.perm import CycleDecomposition, Permutation

# A word, its up-down signature and its index (1 marks a descent).
w = Permutation.parse("31452")
print(w, P.updown_signature(w), P.index_of(w))

# Prefix sums of the signature decide the ballot property; their minimum is T.
for text in ("31452", "14352", "25341", "321"):
    p = Permutation.parse(text)
    print(f"{text}: sums={P.prefix_sums(p)} ballot={P.is_ballot(p)} T={P.t_statistic(p)}")

# Reversing a word swaps ascents and descents and shifts T.
p = Permutation.parse("14352")
q = P.reverse_word(p)
print(p, "->", q, "descents", P.descent_count(p), "->", P.descent_count(q))

# Cycles: canonical form starts each cycle at its minimum.
pi = CycleDecomposition.parse("(1,3,9)(4,2,8,5,6)(7)", 9)
print(pi, "as a word:", P.to_permutation(pi))

# M adds min(cyclic ascents, cyclic descents) over the cycles.
for c in pi.cycles:
    s = P.cycle_stats(c)
    print(c, "cA", s.cyclic_ascents, "cD", s.cyclic_descents, "M", s.m_value)
print("M =", P.m_statistic(pi), " odd order:", P.is_odd_order(pi))
