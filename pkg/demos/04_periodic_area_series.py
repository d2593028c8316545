"""Derivation, primitive PPPs, and ultimately periodic area series.

Adding a full period of rows to every column (derivation) keeps the
boundary paths and adds width*height cells.  Every PPP is a derivative of a
unique primitive one, so the number of PPPs of a given semi-perimeter and
area is eventually periodic in the area.
"""
from ppp import core, periodicity as P, series

p = core.validate_ppp("NNE", "ENN", 1)
for _ in range(3):
    print(f"area {p.area}, thickness {core.thickness(p)}, primitive {P.is_primitive(p)}")
    p = P.derive(p)
print()

print("primitive counts     ", [sum(1 for _ in P.enumerate_primitive(n)) for n in range(2, 8)])
print("z^2 (1-4z)^(-3/2)    ", series.primitive_gf(7).integers()[2:])
print()

for n in (4, 5):
    for kind in P.KINDS:
        s = P.area_series(n, kind)
        rep = P.detect_period(s)
        tail = s.coeffs[rep.preperiod:rep.preperiod + 2 * rep.period]
        print(f"n={n} {kind:6s} preperiod {rep.preperiod:2d} period {rep.period} "
              f"(divides {rep.lcm_bound}) tail {list(tail)}")
