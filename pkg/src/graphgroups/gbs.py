"""Generalised Baumslag-Solitar groups as labelled graphs.

A GBS graph has infinite cyclic vertex and edge groups; an edge (u, v, a, w)
includes its edge group into u's copy of Z with index data a and into v's
with w (signs allowed, labels non-zero).  The classifier implements the
trichotomy for connected GBS data: infinite cyclic, solvable BS(1,n),
unimodular, or C*-simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Disconnected, EmptyGraph, MalformedGraph

GBSEdge = tuple[int, int, int, int]  # (u, v, alpha, omega)


@dataclass(frozen=True)
class GBSGraph:
    num_vertices: int
    edges: tuple[GBSEdge, ...]

    def __post_init__(self):
        if self.num_vertices < 1:
            raise EmptyGraph("GBS graph needs at least one vertex")
        for u, v, a, w in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise MalformedGraph(f"edge ({u},{v}) out of range")
            if a == 0 or w == 0:
                raise MalformedGraph("zero edge label")


def bs_graph(m: int, n: int) -> GBSGraph:
    """BS(m,n) = <a,t | t a^m t^-1 = a^n>: one vertex with one loop."""
    return GBSGraph(1, ((0, 0, m, n),))


def parse_gbs(text: str) -> GBSGraph:
    """Parse the file format:

        gbs-vertices: 2
        gbs-edge: 0 1 3 2
    """
    n: int | None = None
    edges: list[GBSEdge] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("gbs-vertices:"):
            if n is not None:
                raise MalformedGraph("repeated gbs-vertices: line")
            n = int(line[len("gbs-vertices:"):].strip())
        elif line.startswith("gbs-edge:"):
            if n is None:
                raise MalformedGraph("gbs-edge: before gbs-vertices:")
            parts = line[len("gbs-edge:"):].split()
            if len(parts) != 4:
                raise MalformedGraph(f"bad gbs-edge line: {line!r}")
            u, v, a, w = (int(p) for p in parts)
            edges.append((u, v, a, w))
        else:
            raise MalformedGraph(f"unrecognised line: {line!r}")
    if n is None:
        raise MalformedGraph("missing gbs-vertices: line")
    return GBSGraph(n, tuple(edges))


def is_connected_gbs(g: GBSGraph) -> bool:
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for a, b, _, _ in g.edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return len(seen) == g.num_vertices


def _require_connected(g: GBSGraph) -> None:
    if not is_connected_gbs(g):
        raise Disconnected("GBS graph must be connected")


def reduce_gbs(g: GBSGraph) -> GBSGraph:
    """Collapse non-loop edges with a unit label until none remain.

    Collapsing (u, v, a, w) with |a| = 1 merges u into v; the generator of
    G_u equals (gen of G_v)^(a*w), so labels of other edge-endpoints at u are
    multiplied by a*w.  Edges are scanned in input order, restarting after
    each collapse; loops are never collapsed.
    """
    _require_connected(g)
    parent = list(range(g.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges: list[GBSEdge] = list(g.edges)
    while True:
        target = None
        for pos, (u, v, a, w) in enumerate(edges):
            if find(u) != find(v) and (abs(a) == 1 or abs(w) == 1):
                target = pos
                break
        if target is None:
            break
        u, v, a, w = edges.pop(target)
        if abs(a) == 1:
            gone, kept, factor = find(u), find(v), a * w
        else:
            gone, kept, factor = find(v), find(u), a * w
        updated = []
        for eu, ev, ea, ew in edges:
            if find(eu) == gone:
                ea *= factor
            if find(ev) == gone:
                ew *= factor
            updated.append((eu, ev, ea, ew))
        edges = updated
        parent[gone] = kept

    roots: list[int] = []
    for v in range(g.num_vertices):
        r = find(v)
        if r not in roots:
            roots.append(r)
    compact = {r: i for i, r in enumerate(roots)}
    new_edges = tuple((compact[find(u)], compact[find(v)], a, w) for u, v, a, w in edges)
    return GBSGraph(len(roots), new_edges)


@dataclass(frozen=True)
class ModularImage:
    """Subgroup of the multiplicative rationals generated by cycle ratios."""

    generators: tuple[Fraction, ...]

    def is_trivial(self) -> bool:
        return all(q == 1 for q in self.generators)


def modular_image(g: GBSGraph) -> ModularImage:
    """Generators of the modular homomorphism image.

    A BFS spanning tree (input edge order) assigns each vertex a potential;
    every non-tree edge, loops included, contributes the ratio of its
    fundamental cycle: pot(u) * (w/a) / pot(v).
    """
    _require_connected(g)
    pot: dict[int, Fraction] = {0: Fraction(1)}
    tree: set[int] = set()
    frontier = [0]
    while frontier:
        nxt = []
        for at in frontier:
            for pos, (u, v, a, w) in enumerate(g.edges):
                if pos in tree or u == v:
                    continue
                if u == at and v not in pot:
                    pot[v] = pot[u] * Fraction(w, a)
                elif v == at and u not in pot:
                    pot[u] = pot[v] * Fraction(a, w)
                else:
                    continue
                tree.add(pos)
                nxt.append(v if u == at else u)
        frontier = nxt
    gens = tuple(
        pot[u] * Fraction(w, a) / pot[v]
        for pos, (u, v, a, w) in enumerate(g.edges)
        if pos not in tree
    )
    return ModularImage(gens)


def is_unimodular(g: GBSGraph) -> bool:
    """True iff the modular image lies in {-1, 1}."""
    return all(abs(q) == 1 for q in modular_image(g).generators)


def detect_solvable_bs(g: GBSGraph) -> int | None:
    """Some(n), |n| >= 2, iff the reduced graph is a single loop with exactly
    one unit label; such a loop presents BS(1, alpha*omega)."""
    r = reduce_gbs(g)
    if r.num_vertices != 1 or len(r.edges) != 1:
        return None
    _, _, a, w = r.edges[0]
    if (abs(a) == 1) == (abs(w) == 1):
        return None
    n = a * w
    return n if abs(n) >= 2 else None


VERDICT_CSTAR_SIMPLE = "CstarSimple"
VERDICT_SOLVABLE_BS = "NotCstarSimple_SolvableBS"
VERDICT_UNIMODULAR = "NotCstarSimple_Unimodular"
VERDICT_CYCLIC = "Cyclic"
VERDICT_UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Classification:
    verdict: str
    reason: str
    bs_n: int | None = None

    def label(self) -> str:
        if self.verdict == VERDICT_SOLVABLE_BS:
            return f"{self.verdict}({self.bs_n})"
        return self.verdict

    def line(self) -> str:
        return f"verdict={self.label()} reason={self.reason}"


def classify_cstar(g: GBSGraph) -> Classification:
    """The trichotomy for connected GBS data; never Unknown."""
    _require_connected(g)
    r = reduce_gbs(g)
    if not r.edges:
        return Classification(
            VERDICT_CYCLIC, "reduced graph has no edges, the group is infinite cyclic"
        )
    n = detect_solvable_bs(g)
    if n is not None:
        return Classification(
            VERDICT_SOLVABLE_BS,
            f"reduced graph is a single loop with a unit label, the group is BS(1,{n})",
            bs_n=n,
        )
    if is_unimodular(r):
        reason = "every modular cycle ratio is +-1, the group has an infinite cyclic normal subgroup"
        if r.num_vertices == 1 and len(r.edges) == 1:
            _, _, a, w = r.edges[0]
            if abs(a) == 1 and abs(w) == 1:
                reason += " (BS(1,+-1) overlaps the solvable family; the unimodular verdict is preferred)"
        return Classification(VERDICT_UNIMODULAR, reason)
    return Classification(
        VERDICT_CSTAR_SIMPLE,
        "not solvable BS(1,n) and not unimodular, hence C*-simple",
    )


def p_nai_verdict(g: GBSGraph) -> bool:
    """Always False: a GBS group commensurates an infinite cyclic subgroup,
    which rules out generating free products with a fixed free factor."""
    if g.num_vertices < 1:
        raise EmptyGraph("empty GBS graph")
    _require_connected(g)
    return False
