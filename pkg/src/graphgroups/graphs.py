"""Finite simplicial graphs: the combinatorial input of every construction.

Graphs here are tiny (a dozen vertices at most), so all algorithms are plain
breadth-first or backtracking searches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    EmptyGraph,
    LoopEdge,
    MalformedGraph,
    UnknownEndpoint,
    ZeroVertices,
)

Edge = tuple[int, int]  # always stored with u < v


@dataclass(frozen=True)
class SimpGraph:
    """Simplicial graph: ordered vertex names plus a set of undirected edges."""

    vertex_names: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        n = len(self.vertex_names)
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownEndpoint(f"edge ({u},{v}) out of range")
            if u > v:
                raise MalformedGraph("edges must be stored as (min, max) pairs")

    @property
    def n(self) -> int:
        return len(self.vertex_names)

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex bitmask of neighbours (self bit never set)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbours(self, u: int) -> list[int]:
        return [w for w in range(self.n) if self.adjacent(u, w)]


def graph(names: str | tuple[str, ...], *edge_names: tuple[str, str]) -> SimpGraph:
    """Convenience constructor: graph("a b c", ("a","b"), ("b","c"))."""
    name_tuple = tuple(names.split()) if isinstance(names, str) else tuple(names)
    index = {n: i for i, n in enumerate(name_tuple)}
    if len(index) != len(name_tuple):
        raise DuplicateVertex("duplicate vertex name")
    edges = set()
    for a, b in edge_names:
        if a not in index or b not in index:
            raise UnknownEndpoint(f"unknown endpoint in edge ({a},{b})")
        u, v = sorted((index[a], index[b]))
        if u == v:
            raise LoopEdge(f"loop at {a}")
        if (u, v) in edges:
            raise DuplicateEdge(f"duplicate edge ({a},{b})")
        edges.add((u, v))
    return SimpGraph(name_tuple, frozenset(edges))


def parse_graph(text: str) -> SimpGraph:
    """Parse the graph file format:

        vertices: a b c d
        edge: a b
        edge: b c
    """
    names: tuple[str, ...] | None = None
    edge_pairs: list[tuple[str, str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if names is not None:
                raise MalformedGraph("repeated vertices: line")
            names = tuple(line[len("vertices:"):].split())
            if len(set(names)) != len(names):
                raise DuplicateVertex("duplicate vertex in vertices: line")
            if not names:
                raise MalformedGraph("empty vertices: line")
        elif line.startswith("edge:"):
            if names is None:
                raise MalformedGraph("edge: before vertices:")
            parts = line[len("edge:"):].split()
            if len(parts) != 2:
                raise MalformedGraph(f"bad edge line: {line!r}")
            edge_pairs.append((parts[0], parts[1]))
        else:
            raise MalformedGraph(f"unrecognised line: {line!r}")
    if names is None:
        raise MalformedGraph("missing vertices: line")
    return graph(names, *edge_pairs)


def path_graph(n: int) -> SimpGraph:
    """P_n: the path with n vertices v1..vn and n-1 edges."""
    if n < 1:
        raise ZeroVertices("path graph needs at least one vertex")
    names = tuple(f"v{i + 1}" for i in range(n))
    return SimpGraph(names, frozenset((i, i + 1) for i in range(n - 1)))


def complete_multipartite(*part_sizes: int) -> SimpGraph:
    """Complete multipartite graph; K_{2,2,2} is the octahedron skeleton."""
    names = []
    part_of = []
    for p, size in enumerate(part_sizes):
        for i in range(size):
            names.append(f"p{p + 1}v{i + 1}")
            part_of.append(p)
    edges = frozenset(
        (u, v)
        for u in range(len(names))
        for v in range(u + 1, len(names))
        if part_of[u] != part_of[v]
    )
    return SimpGraph(tuple(names), edges)


def components(g: SimpGraph) -> list[SimpGraph]:
    """Induced subgraphs on connected components, ordered by least vertex."""
    seen = [False] * g.n
    comps: list[SimpGraph] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, verts = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            verts.append(u)
            for w in g.neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        verts.sort()
        local = {v: i for i, v in enumerate(verts)}
        comps.append(
            SimpGraph(
                tuple(g.vertex_names[v] for v in verts),
                frozenset(
                    (local[u], local[v]) for u, v in g.edges if u in local and v in local
                ),
            )
        )
    return comps


def component_vertex_sets(g: SimpGraph) -> list[list[int]]:
    """Vertex index lists of the components, in the order used by components()."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, verts = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            verts.append(u)
            for w in g.neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(verts))
    return out


def is_connected(g: SimpGraph) -> bool:
    return g.n > 0 and len(component_vertex_sets(g)) == 1


def is_forest(g: SimpGraph) -> bool:
    """Acyclicity via the Euler-characteristic count |E| = |V| - #components."""
    return len(g.edges) == g.n - len(component_vertex_sets(g))


def _eccentricity(g: SimpGraph, start: int, allowed: set[int]) -> int:
    dist = {start: 0}
    frontier = [start]
    ecc = 0
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbours(u):
                if w in allowed and w not in dist:
                    dist[w] = dist[u] + 1
                    ecc = max(ecc, dist[w])
                    nxt.append(w)
        frontier = nxt
    return ecc


def max_component_diameter(g: SimpGraph) -> int:
    """d(Gamma): the maximum diameter over connected components.

    An isolated vertex contributes diameter 0 (so edgeless graphs have d = 0).
    """
    if g.n == 0:
        raise EmptyGraph("diameter of the empty graph")
    best = 0
    for verts in component_vertex_sets(g):
        allowed = set(verts)
        for v in verts:
            best = max(best, _eccentricity(g, v, allowed))
    return best


def find_induced_path(g: SimpGraph, n: int) -> list[int] | None:
    """Lexicographically least induced P_n, as a vertex sequence, or None.

    Backtracking over vertex sequences in lex order: consecutive vertices must
    be adjacent, all other pairs non-adjacent.  Graphs in scope are tiny.
    """
    if n < 1:
        return None
    path: list[int] = []
    used = [False] * g.n

    def extend() -> bool:
        if len(path) == n:
            return True
        for v in range(g.n):
            if used[v]:
                continue
            if path:
                if not g.adjacent(path[-1], v):
                    continue
                if any(g.adjacent(u, v) for u in path[:-1]):
                    continue
            path.append(v)
            used[v] = True
            if extend():
                return True
            path.pop()
            used[v] = False
        return False

    return list(path) if extend() else None
