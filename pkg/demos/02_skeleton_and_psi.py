"""Skeletons, trunks and the four-tuple encoding.

Each column points to the row of its top cell and each row to the column
holding its rightmost cell.  The result is a functional graph whose cycles
form the trunk; the trees hanging off the trunk are grouped into 4-tuples.
"""
from ppp import core, skeleton
from ppp.skeleton import PsiImage, ROOTS

p = core.validate_ppp("NNNENEE", "ENEENNN", 1)
print(core.render_ascii(p))
sk = skeleton.phi(p)
print("vertices", sk.vertex_count, "cycles", sk.cycles)
print("trunk parameters (k, l):", skeleton.trunk_params(p))
print(core.render_ascii(skeleton.trunk(p)))
print()

im = skeleton.psi_forward(p)
print("encoding:", im.to_dict())
assert skeleton.psi_inverse(im) == p
print()

# Walking the encoding backwards: raise the thickness while keeping the
# tuples, and watch the PPP grow by whole rows.
leaf = ((), (), (), ())
for k in range(1, 4):
    q = skeleton.psi_inverse(PsiImage(k, (leaf, leaf), ROOTS))
    print(f"k={k}: area {q.area}, thickness {core.thickness(q)}")
    print(core.render_ascii(q))

# Round trip over every PPP of semi-perimeter 6 and thickness at most 2.
ppps = list(core.enumerate_ppps(6, 2))
assert all(skeleton.psi_inverse(skeleton.psi_forward(q)) == q for q in ppps)
print(f"round trip verified on {len(ppps)} PPPs")
