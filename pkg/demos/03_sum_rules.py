#!/usr/bin/env python3
"""Contract the solution with the tau-eigen covector at the special point
q = exp(i pi (k+2)/(k+1)) and look at the resulting integer polynomial."""
from bqkz import sumrules as sr
from bqkz import qkzsolver as qs

for k, n in [(2, 2), (3, 2), (2, 3), (4, 2)]:
    sol = qs.solve(k, n)
    rule = sr.sum_rule(sol)
    hom = rule.homogeneous()
    print(f"(k,n)=({k},{n})  I(1,...,1|r) = {sr.format_rpoly(hom)}")
    print(f"    r=0: {hom[0]} = {k + 1}^{n * (n - 1) // 2} x {sr.asm_number(k, n)}"
          f"    r=1: {sum(hom)} = {k + 1}^{n * (n - 1)} x {sr.vsasm_number(k, n)}")

print("\ncovector for (3,2):", [str(x) for x in sr.covector(3, 2).vector()])

# the closed formulas are compared on random rational lines
rule = sr.sum_rule(qs.solve(2, 2))
print()
print(sr.multipoint_check(rule, seed=1).summary())

print("\nA_V^(k)(n), rows n = 1..5, columns k = 1..5")
for row in sr.table_one():
    print("  " + "  ".join(str(x) for x in row))
