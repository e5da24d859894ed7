"""Independent test oracles.

Everything here is deliberately written from first principles, sharing no
algorithmic code with the library: faithful matrix models, brute-force
closure searches, and exhaustive enumerations.
"""

from __future__ import annotations

from collections import deque

from graphgroups.graphs import SimpGraph
from graphgroups.words import FreeWord

# ---------------------------------------------------------------------------
# trefoil group oracle: <x,y | x^3 = y^2> -> SL2(Z) x Z
#
# X^3 = Y^2 = -I in SL2(Z) and <X,Y> = SL2(Z), so the map x -> X, y -> Y has
# kernel generated by z^2 (z = x^3 central); the abelianisation x -> 2,
# y -> 3 is injective on <z^2>.  The pair (matrix, abelianised value) is
# therefore a faithful invariant.
# ---------------------------------------------------------------------------

_X_MAT = ((0, -1), (1, 1))
_Y_MAT = ((0, -1), (1, 0))


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _mat_inv(a):
    # determinant 1 throughout
    return ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))


def trefoil_key(w: FreeWord):
    """A complete invariant of the trefoil-group element represented by w."""
    mat = ((1, 0), (0, 1))
    ab = 0
    for idx, sign in w.letters:
        gen_mat = _X_MAT if idx == 0 else _Y_MAT
        mat = _mat_mul(mat, gen_mat if sign > 0 else _mat_inv(gen_mat))
        ab += sign * (2 if idx == 0 else 3)
    return mat, ab


# ---------------------------------------------------------------------------
# swap-closure of a positive word (trace equality oracle)
# ---------------------------------------------------------------------------


def swap_closure(g: SimpGraph, word: tuple[int, ...]) -> frozenset:
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a != b and g.adjacent(a, b):
                other = w[:i] + (b, a) + w[i + 2 :]
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return frozenset(seen)


# ---------------------------------------------------------------------------
# RAAG triviality oracle: downward search by swaps and free cancellations
# over signed letters (2v for a generator, 2v+1 for its inverse)
# ---------------------------------------------------------------------------


def raag_trivial_oracle(g: SimpGraph, word: tuple[int, ...]) -> bool:
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        if not w:
            return True
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a == b ^ 1:
                other = w[:i] + w[i + 2 :]
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
            if a >> 1 != b >> 1 and g.adjacent(a >> 1, b >> 1):
                other = w[:i] + (b, a) + w[i + 2 :]
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return False


def signed_closure(g: SimpGraph, word: tuple[int, ...]) -> frozenset:
    """Downward closure of a signed word under swaps and cancellations."""
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            nbrs = []
            if a == b ^ 1:
                nbrs.append(w[:i] + w[i + 2 :])
            if a >> 1 != b >> 1 and g.adjacent(a >> 1, b >> 1):
                nbrs.append(w[:i] + (b, a) + w[i + 2 :])
            for other in nbrs:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return frozenset(seen)
