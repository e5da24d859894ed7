import itertools

import pytest

from graphgroups.errors import (
    DuplicateEdge,
    DuplicateVertex,
    EmptyGraph,
    LoopEdge,
    MalformedGraph,
    UnknownEndpoint,
    ZeroVertices,
)
from graphgroups.graphs import (
    SimpGraph,
    complete_multipartite,
    components,
    find_induced_path,
    graph,
    is_forest,
    max_component_diameter,
    parse_graph,
    path_graph,
)


def all_graphs_on(n):
    names = tuple(f"g{i}" for i in range(n))
    pairs = list(itertools.combinations(range(n), 2))
    for k in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, k):
            yield SimpGraph(names, frozenset(chosen))


class TestParse:
    def test_p2(self):
        g = parse_graph("vertices: a b\nedge: a b")
        assert g.n == 2 and g.edges == frozenset({(0, 1)})

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            parse_graph("vertices: a\nedge: a a")

    def test_p4(self):
        g = parse_graph("vertices: a b c d\nedge: a b\nedge: b c\nedge: c d")
        assert g.edges == path_graph(4).edges

    def test_duplicate_vertex(self):
        with pytest.raises(DuplicateVertex):
            parse_graph("vertices: a a")

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdge):
            parse_graph("vertices: a b\nedge: a b\nedge: b a")

    def test_unknown_endpoint(self):
        with pytest.raises(UnknownEndpoint):
            parse_graph("vertices: a b\nedge: a c")

    def test_malformed(self):
        with pytest.raises(MalformedGraph):
            parse_graph("edge: a b")
        with pytest.raises(MalformedGraph):
            parse_graph("vertices: a b\nnonsense")

    def test_whitespace_tolerated(self):
        g = parse_graph("\n  vertices:  a   b \n\n  edge:  a  b \n")
        assert g.n == 2 and len(g.edges) == 1


class TestPathGraph:
    def test_single_vertex(self):
        g = path_graph(1)
        assert g.n == 1 and not g.edges

    def test_p4(self):
        g = path_graph(4)
        assert len(g.edges) == 3

    def test_p2(self):
        assert len(path_graph(2).edges) == 1

    def test_zero(self):
        with pytest.raises(ZeroVertices):
            path_graph(0)


class TestForest:
    def test_p4(self):
        assert is_forest(path_graph(4))

    def test_triangle(self):
        assert not is_forest(graph("a b c", ("a", "b"), ("b", "c"), ("a", "c")))

    def test_octahedron(self):
        assert not is_forest(complete_multipartite(2, 2, 2))

    def test_euler_characterisation(self):
        # acyclicity iff |E| = |V| - #components, on every graph with <= 5 vertices
        for n in range(1, 6):
            for g in all_graphs_on(n):
                acyclic = not _has_cycle(g)
                assert is_forest(g) == acyclic


def _has_cycle(g: SimpGraph) -> bool:
    seen = set()
    for start in range(g.n):
        if start in seen:
            continue
        stack = [(start, -1)]
        seen.add(start)
        while stack:
            v, parent = stack.pop()
            for w in g.neighbours(v):
                if w == parent:
                    continue
                if w in seen:
                    return True
                seen.add(w)
                stack.append((w, v))
    return False


class TestDiameter:
    def test_p4(self):
        assert max_component_diameter(path_graph(4)) == 3

    def test_two_edges(self):
        g = graph("a b c d", ("a", "b"), ("c", "d"))
        assert max_component_diameter(g) == 1

    def test_star(self):
        g = graph("c x y z", ("c", "x"), ("c", "y"), ("c", "z"))
        assert max_component_diameter(g) == 2

    def test_paths(self):
        for n in range(1, 9):
            assert max_component_diameter(path_graph(n)) == n - 1

    def test_empty(self):
        with pytest.raises(EmptyGraph):
            max_component_diameter(SimpGraph((), frozenset()))


class TestInducedPath:
    def test_octahedron_has_no_p4(self):
        assert find_induced_path(complete_multipartite(2, 2, 2), 4) is None

    def test_p4_in_p4(self):
        assert find_induced_path(path_graph(4), 4) == [0, 1, 2, 3]

    def test_too_long(self):
        assert find_induced_path(path_graph(4), 5) is None

    def test_found_paths_are_induced(self):
        for g in all_graphs_on(5):
            for n in range(1, 5):
                found = find_induced_path(g, n)
                if found is None:
                    continue
                assert len(found) == n and len(set(found)) == n
                for i, u in enumerate(found):
                    for j in range(i + 1, n):
                        assert g.adjacent(u, found[j]) == (j == i + 1)


class TestComponents:
    def test_two_edges(self):
        g = graph("a b c d", ("a", "b"), ("c", "d"))
        comps = components(g)
        assert len(comps) == 2
        assert comps[0].vertex_names == ("a", "b")

    def test_connected(self):
        assert len(components(path_graph(4))) == 1

    def test_singletons(self):
        comps = components(graph("a b c"))
        assert len(comps) == 3 and all(c.n == 1 for c in comps)
