#!/usr/bin/env python3
"""Walk through the path basis and the Hecke generators for k=3, n=2.

Paths are ballot words in the letters 1..k, each used n times.  The
generator e_i fixes a path convex at i (times tau) and otherwise sends it
to a sum of paths that are convex at i.
"""
from bqkz import heckerep as hr
from bqkz import pathspace as ps

k, n = 3, 2
basis = ps.enumerate_paths(k, n)
print(f"{len(basis)} paths for k={k}, n={n} (product formula gives {ps.count(k, n)})")
for w in basis:
    print(f"  {ps.word_str(w)}  rank {ps.rank(w, k, n)}  tableau {ps.to_tableau(w, k)}"
          f"  dual {ps.word_str(ps.dual(w, k))}")

R = hr.build(k, n)
for i in range(1, R.N):
    print(f"\ne_{i}")
    for row in R.symbolic_matrix(i):
        print("  " + " ".join(f"{x:>3}" for x in row))

# every relation is checked symbolically in tau and at a few exact values
print()
print(hr.verify_all(R).summary())
