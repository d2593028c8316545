"""Strips (PPPs up to rotation of the cylinder) and their growth.

Rotating the cylinder cyclically shifts the list of 4-tuples, so strips are
necklaces of tuples.  Their generating function comes from the cycle index
of the cyclic group and grows like 4^n / (2n).
"""
from ppp import periodicity as P, series

b = series.strip_gf(8).integers()
print("strip series      ", b[2:])
print("census by rotation", [P.strip_census(n) for n in range(2, 9)])
print()

rows = series.asymptotic_table(400)
print("   n  b_n*2n/4^n  b_n^(1/n)")
for r in rows:
    if r.n in (10, 20, 40, 100, 200, 400):
        print(f"{r.n:4d}  {r.ratio:10.4f}  {r.root:9.4f}")
# The n-th root approaches 4 only like 4 * (2n)^(-1/n); at n = 400 that is
# still about 1.7% short, while successive ratios are much closer.
b400 = series.strip_gf(400).integers()
print("b_400 / b_399 =", b400[400] / b400[399])
