import itertools

import pytest
from hypothesis import given, strategies as st

from graphgroups import trace
from graphgroups.errors import GraphMismatch, InvalidLetter
from graphgroups.graphs import SimpGraph, graph, path_graph
from oracles import swap_closure

P3 = path_graph(3)
P4 = path_graph(4)


def small_graph_strategy(max_n=4):
    def build(n, mask):
        pairs = list(itertools.combinations(range(n), 2))
        chosen = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        return SimpGraph(tuple(f"g{i}" for i in range(n)), chosen)

    return st.integers(2, max_n).flatmap(
        lambda n: st.builds(build, st.just(n), st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    )


graph_and_word = small_graph_strategy().flatmap(
    lambda g: st.tuples(st.just(g), st.lists(st.integers(0, g.n - 1), max_size=7).map(tuple))
)


class TestNormalize:
    def test_adjacent_swap(self):
        assert trace.normalize(P3, (1, 0)).nf == (0, 1)

    def test_non_adjacent_fixed(self):
        assert trace.normalize(P4, (3, 0)).nf == (3, 0)
        assert trace.normalize(P4, (3, 0)).nf != trace.normalize(P4, (0, 3)).nf

    def test_empty(self):
        assert trace.normalize(P4, ()).nf == ()

    def test_invalid_letter(self):
        with pytest.raises(InvalidLetter):
            trace.normalize(P3, (3,))

    @given(graph_and_word)
    def test_idempotent_and_length_preserving(self, gw):
        g, w = gw
        nf = trace.normalize(g, w).nf
        assert len(nf) == len(w)
        assert trace.normalize(g, nf).nf == nf

    @given(graph_and_word)
    def test_lex_least_of_closure(self, gw):
        g, w = gw
        assert trace.normalize(g, w).nf == min(swap_closure(g, w))


class TestEqual:
    def test_commuting(self):
        assert trace.equal(trace.normalize(P4, (0, 1)), trace.normalize(P4, (1, 0)))

    def test_non_commuting(self):
        assert not trace.equal(trace.normalize(P4, (0, 3)), trace.normalize(P4, (3, 0)))

    def test_swap_in_context(self):
        # v2 v3 v2 = v3 v2 v2 since v2, v3 are adjacent
        assert trace.equal(trace.normalize(P4, (1, 2, 1)), trace.normalize(P4, (2, 1, 1)))

    def test_graph_mismatch(self):
        with pytest.raises(GraphMismatch):
            trace.equal(trace.normalize(P4, ()), trace.normalize(P3, ()))

    @given(graph_and_word, st.data())
    def test_matches_closure_oracle(self, gw, data):
        g, w = gw
        other = data.draw(st.lists(st.integers(0, g.n - 1), max_size=7).map(tuple))
        lhs = trace.equal(trace.normalize(g, w), trace.normalize(g, other))
        assert lhs == (other in swap_closure(g, w))


class TestConcat:
    def test_identity(self):
        t = trace.normalize(P4, (2, 1))
        assert trace.equal(trace.concat(t, trace.identity(P4)), t)

    def test_commuting_generators(self):
        a = trace.normalize(P4, (0,))
        b = trace.normalize(P4, (1,))
        assert trace.equal(trace.concat(a, b), trace.concat(b, a))

    def test_associative(self):
        a, b, c = (trace.normalize(P4, (v,)) for v in (0, 1, 2))
        assert trace.equal(
            trace.concat(trace.concat(a, b), c), trace.concat(a, trace.concat(b, c))
        )


class TestStartsWith:
    def test_commuting_prefix(self):
        assert trace.starts_with(trace.normalize(P4, (1, 0)), (0,))

    def test_blocked_prefix(self):
        assert not trace.starts_with(trace.normalize(P4, (3, 0)), (0,))

    def test_empty_prefix(self):
        assert trace.starts_with(trace.normalize(P4, (2, 3)), ())

    def test_exhaustive_on_p4(self):
        # starts_with(t, u) iff some representative has u as a literal prefix,
        # for every trace and every word of length <= 4
        words4 = [
            w for L in range(5) for w in itertools.product(range(4), repeat=L)
        ]
        for t in trace.enumerate_traces(P4, 4):
            closure = swap_closure(P4, t.nf)
            prefixes = {rep[:k] for rep in closure for k in range(len(rep) + 1)}
            for u in words4:
                assert trace.starts_with(t, u) == (u in prefixes)


class TestEnumerate:
    def test_p4_lengths(self):
        assert trace.count_traces_by_length(P4, 2) == [1, 4, 13]

    def test_free_monoid(self):
        g = graph("a b")
        assert trace.count_traces_by_length(g, 2) == [1, 2, 4]

    def test_order_and_uniqueness(self):
        seen = list(trace.enumerate_traces(P4, 3))
        keys = [(len(t.nf), t.nf) for t in seen]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_counts_match_closure_classes(self):
        for g in (P3, P4, graph("a b c", ("a", "b"))):
            for length in range(5):
                words = list(itertools.product(range(g.n), repeat=length))
                classes = {frozenset(swap_closure(g, w)) for w in words}
                assert trace.count_traces_by_length(g, length)[length] == len(classes)
