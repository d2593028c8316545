"""First steps with periodic parallelogram polyominoes.

A PPP is a parallelogram polyomino drawn on a cylinder: its first and last
columns are glued along ``g`` rows.  This script builds a few by hand, draws
them, and counts the thickness-1 ones for small semi-perimeters.
"""
from math import comb

from ppp import core

# The smallest PPP: one column of two cells glued onto itself along one row.
smallest = core.validate_ppp("NNE", "ENN", 1)
print("smallest PPP")
print(core.render_ascii(smallest))
print(core.stats(smallest), "thickness", core.thickness(smallest))
print()

# A staircase of width 3.  The flat boundary words and their periodic
# one-period versions, which ignore where the cylinder was cut open.
stair = core.validate_ppp("NNENEE", "ENEENN", 1)
print(core.render_ascii(stair))
print("flat bits    ", core.flat_bits(stair.upper), core.flat_bits(stair.lower))
print("periodic     ", *core.path_words(stair))
print()

# Malformed input is rejected with a specific error.
for args in [("NNE", "ENN", 2), ("NE", "EN", 1), ("NNE", "EN", 1)]:
    try:
        core.validate_ppp(*args)
    except core.PppError as exc:
        print(f"{args} rejected: {type(exc).__name__}")
print()

# Thickness-1 PPPs are counted by 4^(n-1) - C(2n-1, n-1).
print(" n  thickness-1  formula")
for n in range(2, 8):
    count = sum(1 for _ in core.enumerate_ppps(n, 1))
    print(f"{n:2d}  {count:11d}  {4 ** (n - 1) - comb(2 * n - 1, n - 1):7d}")
