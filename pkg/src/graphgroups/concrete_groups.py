"""Exact arithmetic in three concrete groups.

* ``BS(1,n)`` = <a,t | t a t^-1 = a^n>, faithfully represented by affine
  maps x -> n^k x + b with b a rational whose denominator is a power of |n|.

* The trefoil knot group ``G0 = <x,y | x^3 = y^2>``, an amalgam of two
  infinite cyclic groups over z = x^3 = y^2 (which is central).  Elements
  carry a unique normal form z^c s_1 ... s_m with syllables s_i alternating
  between {x, x^2} and {y}.

* The HNN extension ``G = <G0, t | t x^3 t^-1 = x y>`` with associated
  subgroups <b> = <x^3> and <c> = <x y>.  Elements are Britton-reduced words
  g_0 t^{e_1} g_1 ... t^{e_m} g_m; on top of Britton reduction, every g_i
  with i < m is normalised modulo the associated subgroup carried by the
  next t-letter (<c> before t, <b> before t^-1), pushing the discarded power
  rightwards.  The resulting form is a canonical equality certificate.

Word alphabets are fixed: (a, t) for BS(1,n), (x, y) for the trefoil, and
(x, y, t) for the HNN extension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidLetter, ModulusMismatch
from .words import FreeWord, exponent_sum

# ---------------------------------------------------------------------------
# BS(1, n) as affine maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineElement:
    """The affine map x -> n^k x + b."""

    n: int
    k: int
    b: Fraction

    def __post_init__(self):
        if abs(self.n) < 2:
            raise ModulusMismatch("affine modulus needs |n| >= 2")


def affine_identity(n: int) -> AffineElement:
    return AffineElement(n, 0, Fraction(0))


def bs_multiply(e1: AffineElement, e2: AffineElement) -> AffineElement:
    if e1.n != e2.n:
        raise ModulusMismatch("affine elements with different moduli")
    return AffineElement(e1.n, e1.k + e2.k, Fraction(e1.n) ** e1.k * e2.b + e1.b)


def bs_invert(e: AffineElement) -> AffineElement:
    return AffineElement(e.n, -e.k, -(Fraction(e.n) ** -e.k) * e.b)


def bs_equal(e1: AffineElement, e2: AffineElement) -> bool:
    if e1.n != e2.n:
        raise ModulusMismatch("affine elements with different moduli")
    return (e1.k, e1.b) == (e2.k, e2.b)


def bs_from_word(n: int, w: FreeWord) -> AffineElement:
    """Image of a word over (a, t) under a -> x+1, t -> nx."""
    out = affine_identity(n)
    gens = (AffineElement(n, 0, Fraction(1)), AffineElement(n, 1, Fraction(0)))
    for idx, sign in w.letters:
        if idx > 1:
            raise InvalidLetter("BS(1,n) words use the two generators a, t")
        factor = gens[idx] if sign > 0 else bs_invert(gens[idx])
        out = bs_multiply(out, factor)
    return out


# ---------------------------------------------------------------------------
# the trefoil group <x, y | x^3 = y^2>
# ---------------------------------------------------------------------------

_X, _XX, _Y = 1, 2, 3  # syllable codes: x, x^2, y


@dataclass(frozen=True)
class TrefoilElement:
    """Normal form z^central s_1 ... s_m over coset representatives
    {1, x, x^2} of <x>/<z> and {1, y} of <y>/<z>, strictly alternating."""

    central: int = 0
    syllables: tuple[int, ...] = ()

    def is_identity(self) -> bool:
        return self.central == 0 and not self.syllables

    def syllable_length(self) -> int:
        return len(self.syllables)


TREFOIL_IDENTITY = TrefoilElement()


def _is_x_type(s: int) -> bool:
    return s != _Y


def _push_syllable(stack: list[int], s: int) -> int:
    """Append s, merging with the top syllable; returns the central carry."""
    if not stack or _is_x_type(stack[-1]) != _is_x_type(s):
        stack.append(s)
        return 0
    if s == _Y:  # y * y = z
        stack.pop()
        return 1
    total = stack[-1] + s  # x-exponents add: 2 -> x^2, 3 -> z, 4 -> z x
    stack.pop()
    if total == 2:
        stack.append(_XX)
        return 0
    if total == 3:
        return 1
    stack.append(_X)
    return 1


def trefoil_multiply(g: TrefoilElement, h: TrefoilElement) -> TrefoilElement:
    central = g.central + h.central
    stack = list(g.syllables)
    for s in h.syllables:
        central += _push_syllable(stack, s)
    return TrefoilElement(central, tuple(stack))


def trefoil_invert(g: TrefoilElement) -> TrefoilElement:
    # x^-1 = z^-1 x^2, (x^2)^-1 = z^-1 x, y^-1 = z^-1 y
    flip = {_X: _XX, _XX: _X, _Y: _Y}
    return TrefoilElement(
        -g.central - len(g.syllables), tuple(flip[s] for s in reversed(g.syllables))
    )


def trefoil_equal(g: TrefoilElement, h: TrefoilElement) -> bool:
    return g == h


_TREFOIL_LETTERS = {
    (0, 1): TrefoilElement(0, (_X,)),
    (0, -1): TrefoilElement(-1, (_XX,)),
    (1, 1): TrefoilElement(0, (_Y,)),
    (1, -1): TrefoilElement(-1, (_Y,)),
}


def trefoil_from_word(w: FreeWord) -> TrefoilElement:
    """Image of a word over (x, y) in <x,y | x^3 = y^2>."""
    out = TREFOIL_IDENTITY
    for idx, sign in w.letters:
        if idx > 1:
            raise InvalidLetter("trefoil words use the two generators x, y")
        out = trefoil_multiply(out, _TREFOIL_LETTERS[(idx, sign)])
    return out


def b_power(k: int) -> TrefoilElement:
    """b^k where b = x^3 = z."""
    return TrefoilElement(k, ())


def c_power(k: int) -> TrefoilElement:
    """c^k where c = x y."""
    if k == 0:
        return TREFOIL_IDENTITY
    if k > 0:
        return TrefoilElement(0, (_X, _Y) * k)
    return TrefoilElement(2 * k, (_Y, _XX) * (-k))


def trefoil_power_of_b(g: TrefoilElement) -> int | None:
    """Some(k) iff g = b^k; b = x^3 generates the centre."""
    return g.central if not g.syllables else None


def trefoil_power_of_c(g: TrefoilElement) -> int | None:
    """Some(k) iff g = (xy)^k; |c^k| = 2|k| syllables, so one candidate each way."""
    m = len(g.syllables)
    if m == 0:
        return 0 if g.central == 0 else None
    if m % 2:
        return None
    j = m // 2
    if g == c_power(j):
        return j
    if g == c_power(-j):
        return -j
    return None


# ---------------------------------------------------------------------------
# the HNN extension <x, y, t | x^3 = y^2, t x^3 t^-1 = x y>
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HNNTrefoilElement:
    """Canonical Britton form g_0 (e_1, g_1) ... (e_m, g_m)."""

    head: TrefoilElement = TREFOIL_IDENTITY
    tail: tuple[tuple[int, TrefoilElement], ...] = ()

    def is_identity(self) -> bool:
        return not self.tail and self.head.is_identity()

    def britton_length(self) -> int:
        return len(self.tail)


HNN_IDENTITY = HNNTrefoilElement()


class _Builder:
    """Stack machine performing Britton reduction as letters arrive."""

    def __init__(self):
        self.parts: list = [TREFOIL_IDENTITY]  # [g0, e1, g1, e2, g2, ...]

    def push_base(self, h: TrefoilElement) -> None:
        self.parts[-1] = trefoil_multiply(self.parts[-1], h)

    def push_t(self, eps: int) -> None:
        if len(self.parts) >= 3 and self.parts[-2] == -eps:
            g = self.parts[-1]
            if eps < 0:  # t g t^-1 with g = b^k collapses to c^k
                k = trefoil_power_of_b(g)
                if k is not None:
                    del self.parts[-2:]
                    self.push_base(c_power(k))
                    return
            else:  # t^-1 g t with g = c^k collapses to b^k
                k = trefoil_power_of_c(g)
                if k is not None:
                    del self.parts[-2:]
                    self.push_base(b_power(k))
                    return
        self.parts.append(eps)
        self.parts.append(TREFOIL_IDENTITY)

    def replay(self, e: HNNTrefoilElement) -> None:
        self.push_base(e.head)
        for eps, g in e.tail:
            self.push_t(eps)
            self.push_base(g)

    def finish(self) -> HNNTrefoilElement:
        head = self.parts[0]
        tail = list(zip(self.parts[1::2], self.parts[2::2]))
        return _coset_normalise(head, tail)


def _c_coset_rep(g: TrefoilElement) -> tuple[TrefoilElement, int]:
    """Write g = rep * c^j with rep the least element of g<c> in the
    (syllable length, central exponent, syllables) order.

    |g c^-j| >= 2|j| - |g| syllables, so candidates beyond |j| <= |g| + 1
    are never minimal; the argmin depends only on the coset.
    """
    bound = len(g.syllables) + 1
    best = None
    best_j = 0
    for j in range(-bound, bound + 1):
        cand = trefoil_multiply(g, c_power(-j))
        key = (len(cand.syllables), cand.central, cand.syllables)
        if best is None or key < (len(best.syllables), best.central, best.syllables):
            best, best_j = cand, j
    return best, best_j


def _coset_normalise(
    head: TrefoilElement, tail: list[tuple[int, TrefoilElement]]
) -> HNNTrefoilElement:
    """Push coset remainders rightwards through each t-letter.

    Before a t the base element is reduced mod <c> (c^k t = t b^k); before a
    t^-1 it is reduced mod <b> (b^k t^-1 = t^-1 c^k).  This never creates or
    removes a pinch, so one left-to-right pass yields the canonical form.
    """
    pieces = [head] + [g for _, g in tail]
    signs = [eps for eps, _ in tail]
    for i, eps in enumerate(signs):
        if eps > 0:
            rep, k = _c_coset_rep(pieces[i])
            pieces[i] = rep
            pieces[i + 1] = trefoil_multiply(b_power(k), pieces[i + 1])
        else:
            k = pieces[i].central
            pieces[i] = TrefoilElement(0, pieces[i].syllables)
            pieces[i + 1] = trefoil_multiply(c_power(k), pieces[i + 1])
    return HNNTrefoilElement(pieces[0], tuple(zip(signs, pieces[1:])))


def hnn_from_word(w: FreeWord) -> HNNTrefoilElement:
    """Image of a word over (x, y, t); equal canonical forms iff equal in G."""
    builder = _Builder()
    for idx, sign in w.letters:
        if idx > 2:
            raise InvalidLetter("HNN words use the three generators x, y, t")
        if idx == 2:
            builder.push_t(sign)
        else:
            builder.push_base(_TREFOIL_LETTERS[(idx, sign)])
    return builder.finish()


def hnn_embed(g: TrefoilElement) -> HNNTrefoilElement:
    return HNNTrefoilElement(g, ())


def hnn_multiply(u: HNNTrefoilElement, v: HNNTrefoilElement) -> HNNTrefoilElement:
    builder = _Builder()
    builder.replay(u)
    builder.replay(v)
    return builder.finish()


def hnn_invert(u: HNNTrefoilElement) -> HNNTrefoilElement:
    builder = _Builder()
    builder.push_base(trefoil_invert(u.tail[-1][1]) if u.tail else trefoil_invert(u.head))
    if u.tail:
        for i in range(len(u.tail) - 1, -1, -1):
            eps = u.tail[i][0]
            below = u.tail[i - 1][1] if i > 0 else u.head
            builder.push_t(-eps)
            builder.push_base(trefoil_invert(below))
    return builder.finish()


def hnn_equal(u: HNNTrefoilElement, v: HNNTrefoilElement) -> bool:
    return u == v


def hnn_is_identity_by_britton(u: HNNTrefoilElement) -> bool:
    """Identity test straight from Britton's lemma: a pinch-free word with a
    t-letter is non-trivial, otherwise the base normal form decides.  Used as
    an oracle for the canonical-form equality."""
    return not u.tail and u.head.is_identity()


# ---------------------------------------------------------------------------
# the height character of an ascending HNN extension
# ---------------------------------------------------------------------------


def psi(w: FreeWord, stable_letter: int) -> int:
    """Exponent sum of the stable letter; psi = 0 is the elliptic case."""
    return exponent_sum(w, stable_letter)


def is_elliptic(w: FreeWord, stable_letter: int) -> bool:
    return psi(w, stable_letter) == 0


def is_principal(g: FreeWord, subgroup: list[FreeWord], stable_letter: int) -> bool:
    """Is g a principal element of the subgroup generated by the given words,
    i.e. psi(g) = l > 0 where psi(subgroup) = l Z?"""
    values = [psi(w, stable_letter) for w in subgroup]
    l = math.gcd(*values) if values else 0
    return l > 0 and psi(g, stable_letter) == l
