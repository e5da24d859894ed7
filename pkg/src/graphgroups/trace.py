"""The trace monoid T(Gamma) of a simplicial graph.

Generators commute exactly along edges of the graph.  Every element is
represented by its canonical normal form: the lexicographically least word
(in vertex declaration order) among all words reachable by swapping adjacent
commuting letters.  Two positive words are equal in T(Gamma) iff their
normal forms coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ._normal import lex_least
from .errors import GraphMismatch, InvalidLetter
from .graphs import SimpGraph
from .words import PositiveWord


def _check_letters(g: SimpGraph, w: PositiveWord) -> None:
    for v in w:
        if not 0 <= v < g.n:
            raise InvalidLetter(f"letter {v} outside graph with {g.n} vertices")


def canonical_word(g: SimpGraph, w: PositiveWord) -> PositiveWord:
    """Lex-least representative of the swap class of w."""
    _check_letters(g, w)
    return lex_least(tuple(w), g.adjacency_masks(), 0)


@dataclass(frozen=True)
class Trace:
    """An element of T(Gamma), held in canonical normal form."""

    graph: SimpGraph
    nf: PositiveWord

    def __len__(self) -> int:
        return len(self.nf)

    def is_identity(self) -> bool:
        return not self.nf

    def text(self) -> str:
        return " ".join(self.graph.vertex_names[v] for v in self.nf) if self.nf else "1"


def normalize(g: SimpGraph, w: PositiveWord) -> Trace:
    return Trace(g, canonical_word(g, w))


def identity(g: SimpGraph) -> Trace:
    return Trace(g, ())


def equal(t1: Trace, t2: Trace) -> bool:
    if t1.graph != t2.graph:
        raise GraphMismatch("traces over different graphs")
    return t1.nf == t2.nf


def concat(t1: Trace, t2: Trace) -> Trace:
    if t1.graph != t2.graph:
        raise GraphMismatch("traces over different graphs")
    return Trace(t1.graph, lex_least(t1.nf + t2.nf, t1.graph.adjacency_masks(), 0))


def starts_with(t: Trace, u: PositiveWord) -> bool:
    """Is u a prefix of some representative word of t?

    Letters of u are extracted greedily: each must have an occurrence in the
    remainder of t that commutes with everything before it.
    """
    _check_letters(t.graph, u)
    adj = t.graph.adjacency_masks()
    remaining = list(t.nf)
    for g in u:
        mask = 0
        for pos, v in enumerate(remaining):
            if v == g and mask & ~adj[v] == 0:
                del remaining[pos]
                break
            mask |= 1 << v
            if v == g:
                # the first blocked occurrence of g blocks all later ones
                return False
        else:
            return False
    return True


def enumerate_traces(g: SimpGraph, max_len: int) -> Iterator[Trace]:
    """All distinct traces of length <= max_len, ordered by (length, lex nf).

    Every trace of length k+1 is (trace of length k) * letter, so one BFS
    level per length suffices.
    """
    adj = g.adjacency_masks()
    level: set[PositiveWord] = {()}
    yield Trace(g, ())
    for _ in range(max_len):
        nxt: set[PositiveWord] = set()
        for nf in level:
            for v in range(g.n):
                nxt.add(lex_least(nf + (v,), adj, 0))
        for nf in sorted(nxt):
            yield Trace(g, nf)
        level = nxt


def count_traces_by_length(g: SimpGraph, max_len: int) -> list[int]:
    counts = [0] * (max_len + 1)
    for t in enumerate_traces(g, max_len):
        counts[len(t.nf)] += 1
    return counts
