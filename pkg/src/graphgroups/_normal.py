"""Greedy lexicographic normal form over commutation (swap) classes.

Letters are small non-negative ints; ``letter >> shift`` recovers the vertex
(shift 0: positive trace letters; shift 1: signed letters 2v / 2v+1 for v and
its inverse, which makes integer order equal to g1 < g1^-1 < g2 < ...).

An occurrence is *available* when every earlier letter commutes with it,
i.e. every earlier vertex is a graph neighbour of its vertex; same-vertex
occurrences never commute (no loops).  Repeatedly emitting the least
available letter yields the lexicographically least word of the swap class.
"""

from __future__ import annotations


def lex_least(word: tuple[int, ...], adj: tuple[int, ...], shift: int) -> tuple[int, ...]:
    remaining = list(word)
    out: list[int] = []
    while remaining:
        best_letter = -1
        best_pos = -1
        mask = 0
        for pos, letter in enumerate(remaining):
            v = letter >> shift
            if mask & ~adj[v] == 0 and (best_pos < 0 or letter < best_letter):
                best_letter = letter
                best_pos = pos
            mask |= 1 << v
        out.append(best_letter)
        del remaining[best_pos]
    return tuple(out)
