"""Folded subgroup graphs for finitely generated subgroups of free groups.

A subgroup graph is a basepointed, edge-labelled directed graph that is
*folded*: no vertex carries two outgoing or two incoming edges with the same
label.  Reduced words in the subgroup are exactly the labels of reduced
closed paths at the basepoint.  Construction: wedge of generator loops,
identify endpoints until folded (union-find), trim hanging trees, then
renumber vertices by a label-ordered BFS so equal subgroups give equal
graphs regardless of fold order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidLetter, PowersShareRoot, RankMismatch, TrivialElement
from .words import FreeWord, reduce

DirEdge = tuple[int, int, int]  # (source, target, label)


@dataclass(frozen=True)
class StallingsGraph:
    ambient_rank: int
    num_vertices: int
    edges: frozenset[DirEdge]
    basepoint: int = 0

    def out_map(self) -> dict[tuple[int, int], int]:
        return {(u, lab): v for u, v, lab in self.edges}

    def in_map(self) -> dict[tuple[int, int], int]:
        return {(v, lab): u for u, v, lab in self.edges}


class _Partition:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def add(self, x: int):
        self.parent.setdefault(x, x)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[max(rx, ry)] = min(rx, ry)
        return True


def _fold(num_vertices: int, edges: set[DirEdge], basepoint: int) -> tuple[set[DirEdge], int]:
    """Fold and trim to the core; returns (edges, basepoint) unrenumbered."""
    part = _Partition()
    for v in range(num_vertices):
        part.add(v)

    changed = True
    while changed:
        changed = False
        out_seen: dict[tuple[int, int], int] = {}
        in_seen: dict[tuple[int, int], int] = {}
        current = {(part.find(u), part.find(v), lab) for u, v, lab in edges}
        for u, v, lab in current:
            w = out_seen.setdefault((u, lab), v)
            if w != v:
                part.union(w, v)
                changed = True
                break
            w = in_seen.setdefault((v, lab), u)
            if w != u:
                part.union(w, u)
                changed = True
                break
        edges = current

    edges = {(part.find(u), part.find(v), lab) for u, v, lab in edges}
    bp = part.find(basepoint)

    # trim vertices of degree <= 1 away from the basepoint (core graph)
    while True:
        degree: dict[int, int] = {}
        for u, v, _ in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        hanging = {v for v, d in degree.items() if d <= 1 and v != bp}
        if not hanging:
            break
        edges = {(u, v, lab) for u, v, lab in edges if u not in hanging and v not in hanging}

    return edges, bp


def _canonical(rank: int, edges: set[DirEdge], basepoint: int) -> StallingsGraph:
    """Renumber by BFS from the basepoint, labels in order, out before in."""
    out_map = {(u, lab): v for u, v, lab in edges}
    in_map = {(v, lab): u for u, v, lab in edges}
    order = {basepoint: 0}
    queue = [basepoint]
    while queue:
        u = queue.pop(0)
        for lab in range(rank):
            for nbr in (out_map.get((u, lab)), in_map.get((u, lab))):
                if nbr is not None and nbr not in order:
                    order[nbr] = len(order)
                    queue.append(nbr)
    renamed = frozenset((order[u], order[v], lab) for u, v, lab in edges)
    return StallingsGraph(rank, len(order), renamed, 0)


def from_generators(rank: int, gens: list[FreeWord]) -> StallingsGraph:
    """Folded core graph of the subgroup generated by the given words."""
    for g in gens:
        if g.max_index() >= rank:
            raise InvalidLetter(f"letter outside free group of rank {rank}")
    edges: set[DirEdge] = set()
    next_vertex = 1
    for g in gens:
        w = reduce(g)
        if not w:
            continue
        prev = 0
        for pos, (idx, sign) in enumerate(w.letters):
            target = 0 if pos == len(w.letters) - 1 else next_vertex
            if pos < len(w.letters) - 1:
                next_vertex += 1
            if sign > 0:
                edges.add((prev, target, idx))
            else:
                edges.add((target, prev, idx))
            prev = target
    folded, bp = _fold(next_vertex, edges, 0)
    return _canonical(rank, folded, bp)


def contains(sg: StallingsGraph, w: FreeWord) -> bool:
    """Does reduce(w) label a closed path at the basepoint?"""
    if w.max_index() >= sg.ambient_rank:
        raise InvalidLetter(f"letter outside free group of rank {sg.ambient_rank}")
    out_map = sg.out_map()
    in_map = sg.in_map()
    at = sg.basepoint
    for idx, sign in reduce(w).letters:
        nxt = out_map.get((at, idx)) if sign > 0 else in_map.get((at, idx))
        if nxt is None:
            return False
        at = nxt
    return at == sg.basepoint


def subgroup_rank(sg: StallingsGraph) -> int:
    """Euler characteristic count: rank = |E| - |V| + 1 for a core graph."""
    return len(sg.edges) - sg.num_vertices + 1


def intersect(sg1: StallingsGraph, sg2: StallingsGraph) -> StallingsGraph:
    """Fibre product restricted to the basepoint component, then core-trimmed."""
    if sg1.ambient_rank != sg2.ambient_rank:
        raise RankMismatch("subgroups of free groups of different ranks")
    rank = sg1.ambient_rank
    out1, in1 = sg1.out_map(), sg1.in_map()
    out2, in2 = sg2.out_map(), sg2.in_map()

    start = (sg1.basepoint, sg2.basepoint)
    ids = {start: 0}
    queue = [start]
    edges: set[DirEdge] = set()
    while queue:
        pair = queue.pop(0)
        u1, u2 = pair
        for lab in range(rank):
            v1, v2 = out1.get((u1, lab)), out2.get((u2, lab))
            if v1 is not None and v2 is not None:
                nbr = (v1, v2)
                if nbr not in ids:
                    ids[nbr] = len(ids)
                    queue.append(nbr)
                edges.add((ids[pair], ids[nbr], lab))
            w1, w2 = in1.get((u1, lab)), in2.get((u2, lab))
            if w1 is not None and w2 is not None:
                nbr = (w1, w2)
                if nbr not in ids:
                    ids[nbr] = len(ids)
                    queue.append(nbr)
                edges.add((ids[nbr], ids[pair], lab))
    folded, bp = _fold(len(ids), edges, 0)
    return _canonical(rank, folded, bp)


def is_finite_index(sg: StallingsGraph) -> bool:
    """Finite index iff the graph is a complete automaton (one out- and one
    in-edge per label at every vertex)."""
    out_map = sg.out_map()
    in_map = sg.in_map()
    return all(
        (v, lab) in out_map and (v, lab) in in_map
        for v in range(sg.num_vertices)
        for lab in range(sg.ambient_rank)
    )


def find_free_power(rank: int, elts: list[FreeWord], r_max: int) -> int | None:
    """Least r <= r_max such that the r-th powers freely generate F_k.

    Requires each element non-trivial and the cyclic subgroups pairwise
    trivially intersecting (otherwise no power works).  A k-generator
    subgroup has graph rank <= k, with equality exactly when the generators
    are a free basis, so the test is rank(<h_1^r, ..., h_k^r>) = k.
    """
    reduced = [reduce(h) for h in elts]
    if any(not h for h in reduced):
        raise TrivialElement("free powers need non-trivial elements")
    singles = [from_generators(rank, [h]) for h in reduced]
    for i in range(len(singles)):
        for j in range(i + 1, len(singles)):
            if subgroup_rank(intersect(singles[i], singles[j])) > 0:
                raise PowersShareRoot(
                    f"cyclic subgroups of elements {i} and {j} intersect non-trivially"
                )
    k = len(reduced)
    for r in range(1, r_max + 1):
        powers = [h**r for h in reduced]
        if subgroup_rank(from_generators(rank, powers)) == k:
            return r
    return None
