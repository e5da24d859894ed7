"""Path-shaped trace monoids inside the trefoil knot group and an HNN
extension of it.

In G0 = <x,y | x^3 = y^2> the elements a = x^2 y, b = x^3, c = x y satisfy
[a,b] = [b,c] = 1 (b is central), so they are a candidate image of the trace
monoid of the path v1 - v2 - v3.  Bounded enumeration confirms the monoid
map is injective as far as we push it, yet the corresponding *group* map is
far from injective: b = (a c^-1)^3 kills a specific degree-zero element.

Extending by a stable letter t with t x^3 t^-1 = x y gives d = t x y t^-1
commuting with c, and (a, b, c, d) plays the same game for the path on four
vertices.
"""

from graphgroups.concrete_groups import (
    hnn_multiply,
    trefoil_invert,
    trefoil_multiply,
)
from graphgroups.embeddings import (
    hnn_generators,
    hnn_p4_map,
    render_hnn,
    render_trefoil,
    trefoil_generators,
    trefoil_p3_map,
    verify_monoid_injective,
    verify_no_kernel,
)

a, b, c = trefoil_generators()
print("a =", render_trefoil(a), " b =", render_trefoil(b), " c =", render_trefoil(c))
print("ab = ba:", trefoil_multiply(a, b) == trefoil_multiply(b, a))
print("bc = cb:", trefoil_multiply(b, c) == trefoil_multiply(c, b))
print("ac = ca:", trefoil_multiply(a, c) == trefoil_multiply(c, a))

ac1 = trefoil_multiply(a, trefoil_invert(c))
print("a c^-1 =", render_trefoil(ac1))
print("(a c^-1)^3 = b:", trefoil_multiply(trefoil_multiply(ac1, ac1), ac1) == b)

print()
print("monoid injectivity up to trace length 6:")
report = verify_monoid_injective(trefoil_p3_map(), 6)
for line in report.lines():
    print(" ", line)

print()
print("the group map has kernel; collision search at radius 4:")
report = verify_no_kernel(trefoil_p3_map(), 4)
print(" ", report.lines()[0])
print("  first witness:", report.kernel[0].text())

print()
A, B, C, D = hnn_generators()
print("d =", render_hnn(D))
for u, v, name in ((A, B, "[a,b]"), ((B), C, "[b,c]"), (C, D, "[c,d]")):
    print(f"{name} = 1:", hnn_multiply(u, v) == hnn_multiply(v, u))

print("monoid injectivity of the four-generator family up to length 4:")
report = verify_monoid_injective(hnn_p4_map(), 4)
for line in report.lines():
    print(" ", line)
