"""Normal forms in trace monoids and right-angled Artin groups.

A simplicial graph declares which generators commute.  On the path
v1 - v2 - v3 - v4 the generators v1,v2 commute, v2,v3 commute, v3,v4
commute, and nothing else does.  Every element of the trace monoid (and of
the group) has a canonical representative: the lexicographically least word
reachable by swapping adjacent commuting letters.
"""

from graphgroups import raag, trace
from graphgroups.graphs import path_graph
from graphgroups.words import Alphabet, parse_word

p4 = path_graph(4)
al = Alphabet(p4.vertex_names)

print("the path graph:", p4.vertex_names, sorted(p4.edges))

# v2 v1 and v1 v2 are the same trace; v4 v1 and v1 v4 are not
for text in ("v2 v1", "v4 v1", "v2 v3 v2", "v3 v2 v2"):
    w = tuple(g for g, _ in parse_word(text, al).letters)
    print(f"trace nf({text!r}) = {trace.normalize(p4, w).text()!r}")

# counting distinct traces by length: 1, 4, 13, 40, ...
print("traces by length:", trace.count_traces_by_length(p4, 6))

# the group adds inverses: adjacent commutators die, non-adjacent survive
for text in ("v1 v2 v1^-1 v2^-1", "v1 v3 v1^-1 v3^-1", "v2 v1 v2^-1"):
    e = raag.normalize(p4, parse_word(text, al))
    print(f"raag nf({text!r}) = {e.text()!r}  trivial={e.is_trivial()}")

# positivity is visible in the canonical form
for text in ("v2 v1", "v1^-1 v2"):
    e = raag.normalize(p4, parse_word(text, al))
    print(f"{text!r}: positive={raag.is_positive(e)}")

# the degree-zero subgroup of A(P_n) is free on the n-1 differences
print("degree-zero basis of A(P4):")
for w in raag.bb_basis(4):
    e = raag.normalize(p4, w)
    print("  ", e.text(), " degree:", raag.bb_degree(e))
