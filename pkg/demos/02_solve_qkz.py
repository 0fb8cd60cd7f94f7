#!/usr/bin/env python3
"""Solve the boundary exchange system for k=3, n=2 and check it.

The solve starts from the closed form of the component on the top path and
goes down one lozenge at a time.  Every way of reaching a component is
recomputed and compared, so the solve is also a consistency check.
"""
import time

from bqkz import pathspace as ps
from bqkz import qkzsolver as qs

t0 = time.perf_counter()
sol = qs.solve(3, 2)
print(f"solved in {time.perf_counter() - t0:.2f}s")
for w in sol.basis:
    f = sol[w]
    print(f"  Psi_{ps.word_str(w)}: {len(f)} terms, degree in r {f.degree(sol.N)}")

rep = qs.verify_all(sol, qs.solve(3, 1))
print(rep.summary())

# a negative control: perturb one component and watch the exchange check fail
w = sol.basis.paths[2]
broken = sol.with_component(w, sol[w] + 1)
print("\nafter adding 1 to", ps.word_str(w))
print(qs.verify_exchange(broken).summary())
