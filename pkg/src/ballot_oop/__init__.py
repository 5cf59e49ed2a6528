"""Ballot permutations, odd-order permutations, and the statistics linking them."""

__version__ = "0.1.0"

from .perm import (CycleDecomposition, Permutation, ascent_count, cycle_decomposition,
                   cycle_stats, descent_count, from_cycles, index_of, is_ballot,
                   is_dyck_word, is_odd_order, m_statistic, reverse_cycles, reverse_word,
                   t_statistic, to_permutation, updown_signature)
