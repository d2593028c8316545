"""Trees with a marked vertex and slot, versus rooted unicyclic maps.

Both families have 4^(n-1) - C(2n-1, n-1) members of size n.  The bijection
closes a cycle by adding an edge from the marked vertex to one of the
2p - 1 slots along its root path.
"""
from ppp import dyck, plane
from ppp.plane import DepthTriple

tree = plane.from_word("((()))")
for line in dyck.phi_cap_trace(DepthTriple(tree, 2, 3)):
    print(line)
print()

for slot in dyck.attachment_slots(3):
    print(slot)
print()

print(" n     A     B  round trips")
for n in range(2, 7):
    rep = dyck.check(n)
    ok = rep["inverse_after_forward"] and rep["forward_after_inverse"]
    print(f"{n:2d} {rep['A']:5d} {rep['B']:5d}  {ok}")

# The same numbers as total triangular area under Dyck paths.
print([dyck.triangular_area_total(m) for m in range(1, 8)])
