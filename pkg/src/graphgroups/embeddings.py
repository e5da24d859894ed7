"""Explicit embedding maps and bounded brute-force verifiers.

A :class:`MonoidMap` sends the generators of a trace monoid / RAAG over a
source graph into some target carrier with decidable equality.  The two
verifiers enumerate the source up to a length bound and look for image
collisions, giving *bounded certificates* only: a clean injectivity report
certifies nothing beyond the enumerated ball, while any collision is an
honest witness of failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import concrete_groups as cg
from . import raag, trace
from ._normal import lex_least
from .errors import (
    CommutationViolation,
    DiameterOutOfRange,
    GraphMismatch,
    InvalidLetter,
    NotForest,
    WrongGraph,
    ZeroExponent,
)
from .graphs import (
    SimpGraph,
    component_vertex_sets,
    is_forest,
    max_component_diameter,
    path_graph,
)
from .raag import RaagElement
from .trace import Trace
from .words import Alphabet, FreeWord, PositiveWord, from_positive

# ---------------------------------------------------------------------------
# target carriers (duck-typed: identity / multiply / then invert for groups)
# ---------------------------------------------------------------------------

_XY = Alphabet(("x", "y"))


class FreeMonoidCube:
    """M_2 x M_2 x M_2: triples of positive words over {x, y}."""

    name = "M2^3"
    is_group = False

    def identity(self):
        return ((), (), ())

    def multiply(self, a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2])

    def render(self, a) -> str:
        comps = ["".join(_XY.names[i] for i in c) if c else "1" for c in a]
        return "(" + ", ".join(comps) + ")"


class TraceTarget:
    name = "trace"
    is_group = False

    def __init__(self, graph: SimpGraph):
        self.graph = graph

    def identity(self):
        return trace.identity(self.graph)

    def multiply(self, a, b):
        return trace.concat(a, b)

    def render(self, a) -> str:
        return a.text()


class RaagTarget:
    name = "raag"
    is_group = True

    def __init__(self, graph: SimpGraph):
        self.graph = graph

    def identity(self):
        return raag.identity(self.graph)

    def multiply(self, a, b):
        return raag.multiply(a, b)

    def invert(self, a):
        return raag.invert(a)

    def render(self, a) -> str:
        return a.text()


class TrefoilTarget:
    name = "trefoil"
    is_group = True

    def identity(self):
        return cg.TREFOIL_IDENTITY

    def multiply(self, a, b):
        return cg.trefoil_multiply(a, b)

    def invert(self, a):
        return cg.trefoil_invert(a)

    def render(self, a) -> str:
        return render_trefoil(a)


class HnnTrefoilTarget:
    name = "hnn-trefoil"
    is_group = True

    def identity(self):
        return cg.HNN_IDENTITY

    def multiply(self, a, b):
        return cg.hnn_multiply(a, b)

    def invert(self, a):
        return cg.hnn_invert(a)

    def render(self, a) -> str:
        return render_hnn(a)


class BSCube:
    """BS(1,n) x BS(1,n) x BS(1,n) with exact affine entries."""

    is_group = True

    def __init__(self, n: int = 2):
        self.n = n
        self.name = f"BS(1,{n})^3"

    def identity(self):
        e = cg.affine_identity(self.n)
        return (e, e, e)

    def multiply(self, a, b):
        return tuple(cg.bs_multiply(x, y) for x, y in zip(a, b))

    def invert(self, a):
        return tuple(cg.bs_invert(x) for x in a)

    def render(self, a) -> str:
        return "(" + ", ".join(f"{e.n}^{e.k}x+{e.b}" for e in a) + ")"


def render_trefoil(a: cg.TrefoilElement) -> str:
    parts = []
    if a.central:
        parts.append(f"z^{a.central}" if a.central != 1 else "z")
    for s in a.syllables:
        parts.append({1: "x", 2: "x^2", 3: "y"}[s])
    return " ".join(parts) if parts else "1"


def render_hnn(a: cg.HNNTrefoilElement) -> str:
    parts = [f"[{render_trefoil(a.head)}]"]
    for eps, g in a.tail:
        parts.append("t" if eps > 0 else "t^-1")
        parts.append(f"[{render_trefoil(g)}]")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# monoid maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonoidMap:
    """Generator images for a map out of T(source) (or A(source))."""

    source: SimpGraph
    target: object
    images: tuple
    name: str = "map"

    def __post_init__(self):
        if len(self.images) != self.source.n:
            raise InvalidLetter("one image per source generator is required")
        for u, v in self.source.edges:
            uv = self.target.multiply(self.images[u], self.images[v])
            vu = self.target.multiply(self.images[v], self.images[u])
            if uv != vu:
                raise CommutationViolation(
                    f"images of adjacent generators {u} and {v} do not commute"
                )

    def apply_positive(self, w: PositiveWord):
        out = self.target.identity()
        for v in w:
            out = self.target.multiply(out, self.images[v])
        return out

    def apply_trace(self, t: Trace):
        if t.graph != self.source:
            raise GraphMismatch("trace over a different graph")
        return self.apply_positive(t.nf)

    def apply_free(self, w: FreeWord):
        out = self.target.identity()
        for idx, sign in w.letters:
            img = self.images[idx] if sign > 0 else self.target.invert(self.images[idx])
            out = self.target.multiply(out, img)
        return out


# ---------------------------------------------------------------------------
# the explicit maps
# ---------------------------------------------------------------------------

_P4_EDGES = frozenset({(0, 1), (1, 2), (2, 3)})

_X, _Y = 0, 1
PHI_P4_IMAGES = (
    ((_X,), (_Y,), ()),
    ((_X,), (), (_X,)),
    ((), (_X,), ()),
    ((_Y,), (_X,), (_Y,)),
)


def _require_p4(g: SimpGraph) -> None:
    if g.n != 4 or g.edges != _P4_EDGES:
        raise WrongGraph("expected the path on 4 vertices in declaration order")


def phi_p4(t: Trace) -> tuple[PositiveWord, PositiveWord, PositiveWord]:
    """Componentwise image of a trace over P_4 in M_2^3.

    Generator images (over the free monoid on x, y):
    v1 -> (x, y, 1), v2 -> (x, 1, x), v3 -> (1, x, 1), v4 -> (y, x, y).
    """
    _require_p4(t.graph)
    out = ((), (), ())
    cube = FreeMonoidCube()
    for v in t.nf:
        out = cube.multiply(out, PHI_P4_IMAGES[v])
    return out


def phi_p4_map() -> MonoidMap:
    return MonoidMap(path_graph(4), FreeMonoidCube(), PHI_P4_IMAGES, name="phi-p4")


def paris(g: SimpGraph, w: PositiveWord) -> RaagElement:
    """The positive word w viewed inside A(Gamma); two positive words are
    equal in T(Gamma) iff their images coincide."""
    return raag.normalize(g, from_positive(w))


def star_graph(k: int) -> SimpGraph:
    names = ("c",) + tuple(f"l{i}" for i in range(1, k + 1))
    return SimpGraph(names, frozenset((0, i) for i in range(1, k + 1)))


def star_images(k: int) -> list[RaagElement]:
    """Images of center, leaf_1..leaf_k in A(P_3): center -> v2 (central),
    leaf_i -> v1^i v3 v1^-i (a free family in <v1, v3>)."""
    p3 = path_graph(3)
    images = [raag.normalize(p3, FreeWord(((1, 1),)))]
    for i in range(1, k + 1):
        letters = ((0, 1),) * i + ((2, 1),) + ((0, -1),) * i
        images.append(raag.normalize(p3, FreeWord(letters)))
    return images


def star_embed(k: int, w: FreeWord) -> RaagElement:
    """Evaluate a word over the star alphabet {center, leaf_1..leaf_k} in
    A(P_3) via the star_images assignment."""
    if k < 1:
        raise DiameterOutOfRange("star embedding needs at least one leaf")
    if w.max_index() > k:
        raise InvalidLetter(f"letter outside the star alphabet of size {k + 1}")
    images = star_images(k)
    out = raag.identity(path_graph(3))
    for idx, sign in w.letters:
        factor = images[idx] if sign > 0 else raag.invert(images[idx])
        out = raag.multiply(out, factor)
    return out


# ---------------------------------------------------------------------------
# free products A(P_{d+1}) * <f>
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FreeProductElement:
    """Alternating syllables ("a", RaagElement) / ("f", non-zero int)."""

    syllables: tuple = ()

    def is_identity(self) -> bool:
        return not self.syllables

    def text(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for kind, value in self.syllables:
            parts.append(f"f^{value}" if kind == "f" else f"({value.text()})")
        return " ".join(parts)


def _fp_push(stack: list, syl) -> None:
    kind, value = syl
    if kind == "f" and value == 0:
        return
    if kind == "a" and value.is_trivial():
        return
    if stack and stack[-1][0] == kind:
        if kind == "f":
            total = stack[-1][1] + value
            stack.pop()
            if total:
                stack.append(("f", total))
        else:
            product = raag.multiply(stack[-1][1], value)
            stack.pop()
            if not product.is_trivial():
                stack.append(("a", product))
    else:
        stack.append(syl)


def fp_multiply(u: FreeProductElement, v: FreeProductElement) -> FreeProductElement:
    stack = list(u.syllables)
    for syl in v.syllables:
        _fp_push(stack, syl)
    return FreeProductElement(tuple(stack))


def fp_invert(u: FreeProductElement) -> FreeProductElement:
    out = []
    for kind, value in reversed(u.syllables):
        out.append(("f", -value) if kind == "f" else ("a", raag.invert(value)))
    return FreeProductElement(tuple(out))


class FreeProductTarget:
    is_group = True

    def __init__(self, d: int):
        self.name = f"A(P{d + 1})*Z"

    def identity(self):
        return FreeProductElement()

    def multiply(self, a, b):
        return fp_multiply(a, b)

    def invert(self, a):
        return fp_invert(a)

    def render(self, a) -> str:
        return a.text()


def forest_images(g: SimpGraph) -> tuple[int, list[FreeProductElement]]:
    """Per-generator images of A(Gamma) in A(P_{d+1}) * <f>, for a forest
    with 1 <= d(Gamma) <= 2.

    Component i (ordered by least vertex) lands in the conjugate f^i A f^-i;
    single vertices use v1, edges use (v1, v2), stars use the star_images
    family.  d = 0 is rejected: free monoids embed in groups (such as
    BS(1,2)) whose subgroup structure rules the conclusion out, and d >= 3
    needs path-subdivision machinery not provided here.
    """
    if not is_forest(g):
        raise NotForest("forest embedding needs an acyclic graph")
    d = max_component_diameter(g)
    if d == 0 or d > 2:
        raise DiameterOutOfRange(f"forest embedding covers diameters 1 and 2, got {d}")
    ambient = path_graph(d + 1)
    images: list[FreeProductElement | None] = [None] * g.n
    for ci, verts in enumerate(component_vertex_sets(g)):
        local: dict[int, RaagElement] = {}
        if len(verts) == 1:
            local[verts[0]] = raag.normalize(ambient, FreeWord(((0, 1),)))
        elif len(verts) == 2:
            local[verts[0]] = raag.normalize(ambient, FreeWord(((0, 1),)))
            local[verts[1]] = raag.normalize(ambient, FreeWord(((1, 1),)))
        else:
            degrees = {v: sum(1 for u in verts if g.adjacent(u, v)) for v in verts}
            center = min(v for v in verts if degrees[v] == len(verts) - 1)
            leaves = [v for v in verts if v != center]
            star = star_images(len(leaves))
            local[center] = star[0]
            for j, leaf in enumerate(leaves, start=1):
                local[leaf] = star[j]
        for v, elt in local.items():
            syllables: list = []
            if ci:
                syllables.append(("f", ci))
            syllables.append(("a", elt))
            if ci:
                syllables.append(("f", -ci))
            images[v] = FreeProductElement(tuple(syllables))
    return d, images  # type: ignore[return-value]


def forest_embed(g: SimpGraph, w: FreeWord) -> FreeProductElement:
    """Evaluate a word over the forest's vertices in A(P_{d+1}) * <f>."""
    if w.max_index() >= g.n:
        raise InvalidLetter("letter outside the forest's vertex set")
    d, images = forest_images(g)
    target = FreeProductTarget(d)
    out = target.identity()
    for idx, sign in w.letters:
        factor = images[idx] if sign > 0 else fp_invert(images[idx])
        out = fp_multiply(out, factor)
    return out


# ---------------------------------------------------------------------------
# bounded verifiers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InjectivityReport:
    map_name: str
    max_len: int
    checked: int
    collisions: tuple[tuple[Trace, Trace], ...]

    @property
    def ok(self) -> bool:
        return not self.collisions

    def lines(self) -> list[str]:
        out = [f"checked={self.checked} collisions={len(self.collisions)}"]
        for u, v in self.collisions:
            out.append(f"len={len(v.nf)} u={u.text()} v={v.text()}")
        out.append(f"note=bounded certificate only, trace length <= {self.max_len}")
        return out


@dataclass(frozen=True)
class KernelReport:
    map_name: str
    max_len: int
    checked: int
    kernel: tuple[RaagElement, ...]

    @property
    def ok(self) -> bool:
        return not self.kernel

    def lines(self) -> list[str]:
        out = [f"checked={self.checked} collisions={len(self.kernel)}"]
        for w in self.kernel:
            out.append(f"len={len(w.nf)} w={w.text()}")
        out.append(f"note=bounded certificate only, element length <= {self.max_len}")
        return out


def verify_monoid_injective(m: MonoidMap, max_len: int) -> InjectivityReport:
    """Map every trace of length <= max_len; report image collisions."""
    first: dict = {}
    collisions: list[tuple[Trace, Trace]] = []
    checked = 0
    for t in trace.enumerate_traces(m.source, max_len):
        checked += 1
        image = m.apply_trace(t)
        prev = first.get(image)
        if prev is None:
            first[image] = t
        else:
            collisions.append((prev, t))
    return InjectivityReport(m.name, max_len, checked, tuple(collisions))


def enumerate_raag_ball(g: SimpGraph, max_len: int) -> Iterable[RaagElement]:
    """All elements of A(Gamma) with canonical length <= max_len, in
    (length, lex) order; each length-(k+1) element extends a length-k one."""
    adj = g.adjacency_masks()
    seen: set = {()}
    yield raag.identity(g)
    level = [()]
    letters = list(range(2 * g.n))
    for k in range(max_len):
        nxt = set()
        for nf in level:
            for letter in letters:
                ext = lex_least(raag.shuffle_reduce(nf + (letter,), adj), adj, 1)
                if len(ext) == k + 1 and ext not in seen:
                    seen.add(ext)
                    nxt.add(ext)
        level = sorted(nxt)
        for nf in level:
            yield RaagElement(g, nf)


def verify_no_kernel(m: MonoidMap, max_len: int) -> KernelReport:
    """Look for injectivity failures of the group map on the ball of radius
    max_len: elements u != v with equal images witness the kernel element
    u^-1 v.  Reported kernel elements may have length up to 2 * max_len."""
    first: dict = {}
    kernel: list[RaagElement] = []
    seen_kernel: set = set()
    checked = 0
    for e in enumerate_raag_ball(m.source, max_len):
        checked += 1
        image = m.apply_free(e.word())
        prev = first.get(image)
        if prev is None:
            first[image] = e
        else:
            witness = raag.multiply(raag.invert(prev), e)
            if witness.nf not in seen_kernel:
                seen_kernel.add(witness.nf)
                kernel.append(witness)
    kernel.sort(key=lambda w: (len(w.nf), w.nf))
    return KernelReport(m.name, max_len, checked, tuple(kernel))


# ---------------------------------------------------------------------------
# candidate generating quadruples
# ---------------------------------------------------------------------------


def _power(target, a, k: int):
    out = target.identity()
    step = a if k > 0 else target.invert(a)
    for _ in range(abs(k)):
        out = target.multiply(out, step)
    return out


def prop14_elements(target, a, b, c, d, k: int, l: int, m: int, n: int):
    """The quadruple (a c^k a^-1, b^l, c^m, d^-1 b^n d): candidates for a
    generating set of A(P_4) inside the target group."""
    if 0 in (k, l, m, n):
        raise ZeroExponent("all four exponents must be non-zero")
    a_inv = target.invert(a)
    d_inv = target.invert(d)
    first = target.multiply(target.multiply(a, _power(target, c, k)), a_inv)
    last = target.multiply(target.multiply(d_inv, _power(target, b, n)), d)
    return (first, _power(target, b, l), _power(target, c, m), last)


def prop14_map(target, a, b, c, d, k: int, l: int, m: int, n: int) -> MonoidMap:
    images = prop14_elements(target, a, b, c, d, k, l, m, n)
    return MonoidMap(path_graph(4), target, images, name=f"prop14[{k},{l},{m},{n}]")


# ---------------------------------------------------------------------------
# named built-in maps
# ---------------------------------------------------------------------------

TREFOIL_XY = Alphabet(("x", "y"))
HNN_XYT = Alphabet(("x", "y", "t"))


def trefoil_generators() -> tuple[cg.TrefoilElement, ...]:
    """a = x^2 y, b = x^3, c = x y: they generate T(P_3) naturally."""
    from .words import parse_word

    return tuple(
        cg.trefoil_from_word(parse_word(text, TREFOIL_XY)) for text in ("x^2 y", "x^3", "x y")
    )


def hnn_generators() -> tuple[cg.HNNTrefoilElement, ...]:
    """a, b, c as in the trefoil plus d = t x y t^-1: a T(P_4) quadruple."""
    from .words import parse_word

    return tuple(
        cg.hnn_from_word(parse_word(text, HNN_XYT))
        for text in ("x^2 y", "x^3", "x y", "t x y t^-1")
    )


def trefoil_p3_map() -> MonoidMap:
    return MonoidMap(path_graph(3), TrefoilTarget(), trefoil_generators(), name="trefoil-p3")


def hnn_p4_map() -> MonoidMap:
    return MonoidMap(path_graph(4), HnnTrefoilTarget(), hnn_generators(), name="hnn-p4")


def bs_cube_map(n: int = 2) -> MonoidMap:
    """T(P_4) -> BS(1,n)^3: the free-monoid cube map followed by x -> t,
    y -> a t in every coordinate."""
    cube = BSCube(n)
    t = cg.bs_from_word(n, FreeWord(((1, 1),)))
    at = cg.bs_from_word(n, FreeWord(((0, 1), (1, 1))))

    def comp(wrd: PositiveWord):
        out = cg.affine_identity(n)
        for letter in wrd:
            out = cg.bs_multiply(out, t if letter == _X else at)
        return out

    images = tuple(tuple(comp(c) for c in triple) for triple in PHI_P4_IMAGES)
    return MonoidMap(path_graph(4), cube, images, name=f"bs-cube-{n}")
