"""The right-angled Artin group A(Gamma): word problem and normal forms.

Signed letters are encoded as ints 2v (generator v) and 2v+1 (its inverse),
so integer order realises g1 < g1^-1 < g2 < g2^-1 < ...  A word is
*shuffle-reduced* when no two mutually inverse letters are separated only by
letters commuting with them; shuffle-reduced words are geodesic, and two
shuffle-reduced words represent the same element iff they differ by swaps of
adjacent commuting letters.  The canonical form of an element is the
lexicographically least shuffle-reduced representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._normal import lex_least
from .errors import GraphMismatch, InvalidLetter, TooFewVertices
from .graphs import SimpGraph, path_graph
from .words import FreeWord, gen

SignedWord = tuple[int, ...]


def encode(w: FreeWord) -> SignedWord:
    return tuple(2 * g + (1 if s < 0 else 0) for g, s in w.letters)


def decode(w: SignedWord) -> FreeWord:
    return FreeWord(tuple((letter >> 1, -1 if letter & 1 else 1) for letter in w))


def shuffle_reduce(word: SignedWord, adj: tuple[int, ...]) -> SignedWord:
    """Delete letter pairs x...x^-1 whose gap commutes with x, to a fixpoint.

    Scanning from each position, a letter can cancel with the first gap-
    compatible occurrence of its own generator; a same-generator letter in
    the gap blocks every later cancellation for that position.
    """
    w = list(word)
    deleted = True
    while deleted:
        deleted = False
        n = len(w)
        for i in range(n - 1):
            li = w[i]
            vi = li >> 1
            mask_ok = adj[vi]
            for j in range(i + 1, n):
                lj = w[j]
                if lj == li ^ 1:
                    del w[j]
                    del w[i]
                    deleted = True
                    break
                if not (mask_ok >> (lj >> 1)) & 1:
                    break
            if deleted:
                break
    return tuple(w)


def _check(g: SimpGraph, w: FreeWord) -> None:
    if w.max_index() >= g.n:
        raise InvalidLetter(f"letter index {w.max_index()} outside graph with {g.n} vertices")


def is_trivial_word(g: SimpGraph, w: FreeWord) -> bool:
    """Word problem: does w represent the identity of A(Gamma)?

    Shuffle reduction alone decides this (the canonical form has the same
    length as any shuffle-reduced form).
    """
    _check(g, w)
    return not shuffle_reduce(encode(w), g.adjacency_masks())


@dataclass(frozen=True)
class RaagElement:
    """An element of A(Gamma): canonical (lex-least shuffle-reduced) form."""

    graph: SimpGraph
    nf: SignedWord

    def __len__(self) -> int:
        return len(self.nf)

    def is_trivial(self) -> bool:
        return not self.nf

    def word(self) -> FreeWord:
        return decode(self.nf)

    def text(self) -> str:
        from .words import Alphabet, word_to_text

        return word_to_text(decode(self.nf), Alphabet(self.graph.vertex_names))


def normalize(g: SimpGraph, w: FreeWord) -> RaagElement:
    _check(g, w)
    adj = g.adjacency_masks()
    return RaagElement(g, lex_least(shuffle_reduce(encode(w), adj), adj, 1))


def identity(g: SimpGraph) -> RaagElement:
    return RaagElement(g, ())


def multiply(a: RaagElement, b: RaagElement) -> RaagElement:
    if a.graph != b.graph:
        raise GraphMismatch("elements over different graphs")
    adj = a.graph.adjacency_masks()
    return RaagElement(a.graph, lex_least(shuffle_reduce(a.nf + b.nf, adj), adj, 1))


def invert(a: RaagElement) -> RaagElement:
    inv = tuple(letter ^ 1 for letter in reversed(a.nf))
    adj = a.graph.adjacency_masks()
    return RaagElement(a.graph, lex_least(inv, adj, 1))


def is_trivial(a: RaagElement) -> bool:
    return not a.nf


def equal(a: RaagElement, b: RaagElement) -> bool:
    if a.graph != b.graph:
        raise GraphMismatch("elements over different graphs")
    return a.nf == b.nf


def is_positive(a: RaagElement) -> bool:
    """Membership in the positive monoid A(Gamma)^+.

    Inverse letters are odd in the encoding, and an element is positive iff
    its canonical form contains none of them.
    """
    return all(not letter & 1 for letter in a.nf)


def bb_degree(a: RaagElement) -> int:
    """Image under the character sending every generator to 1."""
    return sum(-1 if letter & 1 else 1 for letter in a.nf)


def bb_basis(n: int) -> list[FreeWord]:
    """Free basis of the degree-zero normal subgroup of A(P_n).

    The kernel of the all-ones character on A(P_n) is free of rank n-1 with
    basis v1^-1 v2, ..., v_{n-1}^-1 v_n.
    """
    if n < 2:
        raise TooFewVertices("need at least two path vertices")
    return [gen(i, -1) * gen(i + 1) for i in range(n - 1)]


def bb_graph(n: int) -> SimpGraph:
    return path_graph(n)


def apply_word(w: FreeWord, images: list[RaagElement]) -> RaagElement:
    """Evaluate w after substituting images[i] for generator i."""
    out = identity(images[0].graph)
    for idx, s in w.letters:
        factor = images[idx] if s > 0 else invert(images[idx])
        out = multiply(out, factor)
    return out
