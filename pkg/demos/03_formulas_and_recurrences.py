"""
Closed forms and recurrences
============================

Exact formulas checked against each other and against the oracle; the
recurrence for odd-order permutations reaches n = 25 in milliseconds.
"""

import time

from ballot_oop import formulas as F
from ballot_oop import oracle as O
from ballot_oop import recurrences as R

# Eulerian numbers and the three closed forms.
print([F.eulerian(6, d) for d in range(6)])
print(F.eulerian_e1(6), F.eulerian_e2(6), F.eulerian_e3(6))

# Ballot counts by descents: formulas for small d and for the top rows.
for n in (5, 7, 9):
    print(n, F.b1_formula(n), F.b2_formula(n), F.b_max_formula(n), O.count_ballot(n, 1))

# Formulas refuse arguments outside their recorded range.
try:
    F.b3_formula(3)
except F.DomainError as exc:
    print("refused:", exc)

# Odd-order permutations by M, straight from the recurrence.
start = time.perf_counter()
table = R.p_recurrence_table(25, 5)
print(f"p(25, d) = {table.row(25)}  ({time.perf_counter() - start:.3f}s)")

# f(r, n) three ways; the 0110 closed form uses the corrected leading sign.
fr = R.FRecurrence()
for n in range(5, 10):
    print(n, O.count_f("0110", n), fr("0110", n), F.f_closed("0110", n),
          "original sign:", F.f_closed("0110", n, original_sign=True))
print("UD sources used by the recurrence:", dict(fr.sources))

# The last-letter table and its column formulas.
bt = R.bndk_table(10)
print([bt.get(10, 2, k) for k in range(1, 11)])
print([R.col2_formula(10, k) for k in range(1, 11)])
