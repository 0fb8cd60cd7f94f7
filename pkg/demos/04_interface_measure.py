#!/usr/bin/env python3
"""Read v_pi Psi_pi at z = 1 as weights of a growing interface (n = 2).

For k = 3 every weight is rational, for k = 4 most are not, but the
probability that a step is convex still comes out rational.
"""
from bqkz import pathspace as ps
from bqkz import qkzsolver as qs
from bqkz import sumrules as sr

sol = qs.solve(3, 2)
w = sr.w_vector(sol)
P = sr.stationary_probabilities(sol)
for p in sol.basis:
    coeffs = ", ".join(str(c) for c in w[p])
    print(f"  {ps.word_str(p)}  w(r) coeffs [{coeffs}]  P = {P[p].to_rational()}")

for k in (2, 3, 4, 5):
    ct = sr.convex_transition_probability(k)
    d = ct.to_json()
    print(f"k={k}: P(convex step) = {d['observable']}  guess {d['conjecture']}  "
          f"{'same' if ct.agrees else 'different'}")

w4 = sr.w_at(sr.w_vector(qs.solve(4, 2)), 1)
irr = sum(1 for x in w4.values() if not x.is_rational())
print(f"\nk=4: {irr} of {len(w4)} entries of w(1) are irrational; "
      f"total {sum(w4.values(), 0 * next(iter(w4.values()))).to_rational()}")
