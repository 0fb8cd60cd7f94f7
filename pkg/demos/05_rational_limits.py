#!/usr/bin/env python3
"""q -> -1 with all z = 1: the components divided by (q^2-1)^d become integers.

For k = 2 and r = 1 they add up to a determinant of binomials.  Size (2,4)
is too large for the symbolic solver, so it goes through the dense modular
engine (many values of q, interpolation, division by (q+1)^d mod p).
Pass --big to run it; it takes a few minutes.
"""
import sys
import time

from bqkz import qkzsolver as qs
from bqkz import rationallimit as rl

for k, n in [(2, 2), (2, 3), (3, 2)]:
    sol = qs.solve(k, n)
    for r in (1, 0):
        lv = rl.homogeneous_limit(sol, r)
        print(f"(k,n)=({k},{n}) r={r}: {lv.vector()}  sum {lv.total}")
print("binomial determinants:", [rl.brauer_degree(n) for n in range(1, 5)])

if "--big" in sys.argv:
    t0 = time.perf_counter()
    lv = rl.homogeneous_limit_modular(
        2, 4, 1, progress=lambda j, m: print(f"\r  q value {j}/{m}", end="", flush=True))
    print(f"\n(2,4) r=1: sum {lv.total} in {time.perf_counter() - t0:.0f}s")
