"""The built-in verification suite.

Each criterion pairs library output with an independent oracle wherever an
exact expected value is not forced by a definition: trace counting and
equality against the swap-closure relation, the RAAG word problem against a
rewriting-closure search, subgroup ranks against a from-scratch fold.  The
suite is deliberately exhaustive on small bounds and uses exact arithmetic
throughout; there are no numerical tolerances anywhere.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import deque
from dataclasses import dataclass

from . import gbs, one_relator, raag, stallings, trace
from .concrete_groups import (
    affine_identity,
    bs_from_word,
    bs_multiply,
    hnn_multiply,
    trefoil_invert,
    trefoil_multiply,
)
from .embeddings import (
    bs_cube_map,
    hnn_generators,
    hnn_p4_map,
    phi_p4_map,
    trefoil_generators,
    trefoil_p3_map,
    verify_monoid_injective,
    verify_no_kernel,
)
from .graphs import SimpGraph, complete_multipartite, find_induced_path, path_graph
from .one_relator import parse_presentation
from .words import FreeWord, gen, parse_word, Alphabet


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.detail} [{self.seconds:.1f}s]"


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def swap_closure_check(g: SimpGraph, max_len: int) -> tuple[bool, list[int]]:
    """Partition all positive words of each length <= max_len by the
    reflexive-transitive closure of single adjacent commuting swaps and
    compare with the canonical-form partition.

    Returns (partitions agree, number of closure classes per length).
    Agreement for every pair of words is equivalent to equality of the two
    partitions, which is what is checked.
    """
    counts: list[int] = []
    agree = True
    for length in range(max_len + 1):
        uf = _UnionFind()
        words = list(itertools.product(range(g.n), repeat=length))
        for w in words:
            uf.add(w)
        for w in words:
            for i in range(length - 1):
                a, b = w[i], w[i + 1]
                if a != b and g.adjacent(a, b):
                    other = w[:i] + (b, a) + w[i + 2 :]
                    uf.union(w, other)
        class_nf: dict = {}
        nf_class: dict = {}
        for w in words:
            root = uf.find(w)
            nf = trace.canonical_word(g, w)
            if class_nf.setdefault(root, nf) != nf:
                agree = False
            if nf_class.setdefault(nf, root) != root:
                agree = False
        counts.append(len(class_nf))
    return agree, counts


def trivial_word_closure(g: SimpGraph, max_len: int) -> set:
    """All signed words of length <= max_len equal to 1 in A(Gamma): the
    closure of the empty word under inserting cancelling pairs and swapping
    adjacent commuting letters (the reverse of the reduction relation)."""
    adj = g.adjacency_masks()
    n = g.n
    pairs = [(2 * v, 2 * v + 1) for v in range(n)] + [(2 * v + 1, 2 * v) for v in range(n)]
    seen: set = {()}
    queue: deque = deque([()])
    while queue:
        w = queue.popleft()
        length = len(w)
        if length + 2 <= max_len:
            for pos in range(length + 1):
                head, tail = w[:pos], w[pos:]
                for p in pairs:
                    new = head + p + tail
                    if new not in seen:
                        seen.add(new)
                        queue.append(new)
        for i in range(length - 1):
            a, b = w[i], w[i + 1]
            if a >> 1 != b >> 1 and (adj[a >> 1] >> (b >> 1)) & 1:
                new = w[:i] + (b, a) + w[i + 2 :]
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
    return seen


def reduced_signed_words(num_gens: int, max_len: int) -> list[tuple[int, ...]]:
    """All freely reduced words over num_gens generators, length <= max_len."""
    out: list[tuple[int, ...]] = [()]
    level: list[tuple[int, ...]] = [()]
    letters = list(range(2 * num_gens))
    for _ in range(max_len):
        nxt = []
        for w in level:
            last = w[-1] if w else None
            for letter in letters:
                if last is None or letter != last ^ 1:
                    nxt.append(w + (letter,))
        out.extend(nxt)
        level = nxt
    return out


def naive_fold_rank(rank: int, gens: list[FreeWord]) -> int:
    """From-scratch Stallings fold using plain edge-list rewriting (no shared
    code with the library's union-find fold); returns the subgroup rank."""
    edges: list[tuple[int, int, int]] = []
    fresh = 1
    for w in gens:
        prev = 0
        letters = w.letters
        for pos, (idx, sign) in enumerate(letters):
            target = 0 if pos == len(letters) - 1 else fresh
            if pos < len(letters) - 1:
                fresh += 1
            edges.append((prev, target, idx) if sign > 0 else (target, prev, idx))
            prev = target

    def substitute(old: int, new: int):
        nonlocal edges
        edges = [
            (new if u == old else u, new if v == old else v, lab) for u, v, lab in edges
        ]

    while True:
        edges = list(dict.fromkeys(edges))
        merged = False
        for (u1, v1, l1), (u2, v2, l2) in itertools.combinations(edges, 2):
            if l1 != l2:
                continue
            if u1 == u2 and v1 != v2:
                substitute(max(v1, v2), min(v1, v2))
                merged = True
                break
            if v1 == v2 and u1 != u2:
                substitute(max(u1, u2), min(u1, u2))
                merged = True
                break
        if not merged:
            break
    edges = list(dict.fromkeys(edges))
    while True:
        degree: dict[int, int] = {}
        for u, v, _ in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        hanging = {x for x, d in degree.items() if d <= 1 and x != 0}
        if not hanging:
            break
        edges = [(u, v, lab) for u, v, lab in edges if u not in hanging and v not in hanging]
    vertices = {0} | {u for u, _, _ in edges} | {v for _, v, _ in edges}
    return len(edges) - len(vertices) + 1


def all_graphs(max_vertices: int) -> list[SimpGraph]:
    """Every labelled simplicial graph with 1..max_vertices vertices."""
    graphs = []
    for n in range(1, max_vertices + 1):
        names = tuple(f"g{i}" for i in range(n))
        possible = list(itertools.combinations(range(n), 2))
        for k in range(len(possible) + 1):
            for chosen in itertools.combinations(possible, k):
                graphs.append(SimpGraph(names, frozenset(chosen)))
    return graphs


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def _timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - start


def criterion_phi_p4(max_len: int = 8, oracle_len: int = 5) -> CriterionResult:
    """Traces of P_4 up to max_len have pairwise distinct images in M_2^3;
    trace counts are confirmed against the swap-closure oracle first."""

    def run():
        p4 = path_graph(4)
        agree, oracle_counts = swap_closure_check(p4, oracle_len)
        counts = trace.count_traces_by_length(p4, max_len)
        counts_ok = counts[: oracle_len + 1] == oracle_counts
        if oracle_len >= 2:
            counts_ok = counts_ok and oracle_counts[2] == 13
        report = verify_monoid_injective(phi_p4_map(), max_len)
        ok = agree and counts_ok and report.ok
        detail = (
            f"counts(<= {oracle_len})={oracle_counts} oracle-agree={agree} "
            f"checked={report.checked} collisions={len(report.collisions)}"
        )
        return ok, detail

    ok, detail, secs = _timed(run)
    return CriterionResult("phi-p4 bounded injectivity", ok, detail, secs)


def criterion_bs_free_submonoid(max_len: int = 10) -> CriterionResult:
    """t and a t generate a free submonoid of BS(1,2): all 2^0+...+2^max_len
    positive words in them are pairwise distinct; the defining relator
    evaluates to the identity."""

    def run():
        ab = Alphabet(("a", "t"))
        t = bs_from_word(2, parse_word("t", ab))
        at = bs_from_word(2, parse_word("a t", ab))
        level = [affine_identity(2)]
        images = {(level[0].k, level[0].b)}
        count = 1
        for _ in range(max_len):
            nxt = []
            for e in level:
                for step in (t, at):
                    val = bs_multiply(e, step)
                    nxt.append(val)
                    images.add((val.k, val.b))
            count += len(nxt)
            level = nxt
        distinct = len(images) == count
        relator_ok = bs_from_word(2, parse_word("t a t^-1 a^-2", ab)) == affine_identity(2)
        return distinct and relator_ok, (
            f"words={count} distinct={len(images)} relator-trivial={relator_ok}"
        )

    ok, detail, secs = _timed(run)
    return CriterionResult("BS(1,2) free submonoid", ok, detail, secs)


def criterion_trefoil(max_inj: int = 6, max_ker: int = 4) -> CriterionResult:
    """Trefoil arithmetic: central commutations, b = (a c^-1)^3, bounded
    injectivity of the T(P_3) copy, and a kernel witness for the group map."""

    def run():
        a, b, c = trefoil_generators()
        comm_ok = trefoil_multiply(a, b) == trefoil_multiply(b, a) and trefoil_multiply(
            b, c
        ) == trefoil_multiply(c, b)
        ac_inv = trefoil_multiply(a, trefoil_invert(c))
        cube = trefoil_multiply(trefoil_multiply(ac_inv, ac_inv), ac_inv)
        power_ok = cube == b
        inj = verify_monoid_injective(trefoil_p3_map(), max_inj)
        ker = verify_no_kernel(trefoil_p3_map(), max_ker)
        witnesses_real = all(
            trefoil_p3_map().apply_free(w.word()).is_identity() for w in ker.kernel
        )
        ok = comm_ok and power_ok and inj.ok and bool(ker.kernel) and witnesses_real
        detail = (
            f"commute={comm_ok} b=(ac^-1)^3={power_ok} inj-checked={inj.checked} "
            f"collisions={len(inj.collisions)} kernel-witnesses={len(ker.kernel)}"
        )
        return ok, detail

    ok, detail, secs = _timed(run)
    return CriterionResult("trefoil group checks", ok, detail, secs)


def criterion_hnn(max_len: int = 5) -> CriterionResult:
    """HNN arithmetic: a, b, c, d commute along the path, and the T(P_4)
    quadruple is injective on traces up to max_len."""

    def run():
        a, b, c, d = hnn_generators()
        comm = all(
            hnn_multiply(u, v) == hnn_multiply(v, u) for u, v in ((a, b), (b, c), (c, d))
        )
        report = verify_monoid_injective(hnn_p4_map(), max_len)
        return comm and report.ok, (
            f"commute={comm} checked={report.checked} collisions={len(report.collisions)}"
        )

    ok, detail, secs = _timed(run)
    return CriterionResult("hnn-trefoil checks", ok, detail, secs)


def criterion_octahedron_and_cube(max_len: int = 8) -> CriterionResult:
    """K_{2,2,2} has no induced P_4 (so the cube of free monoids is a trace
    monoid without P_4); the composite T(P_4) -> BS(1,2)^3 is injective on
    traces up to max_len."""

    def run():
        k222 = complete_multipartite(2, 2, 2)
        no_p4 = find_induced_path(k222, 4) is None
        # independent exhaustive confirmation over all ordered 4-tuples
        exhaustive = True
        for perm in itertools.permutations(range(6), 4):
            consecutive = all(k222.adjacent(perm[i], perm[i + 1]) for i in range(3))
            chords = any(
                k222.adjacent(perm[i], perm[j]) for i in range(4) for j in range(i + 2, 4)
            )
            if consecutive and not chords:
                exhaustive = False
        report = verify_monoid_injective(bs_cube_map(2), max_len)
        ok = no_p4 and exhaustive and report.ok
        detail = (
            f"induced-P4-absent={no_p4} exhaustive-agree={exhaustive} "
            f"checked={report.checked} collisions={len(report.collisions)}"
        )
        return ok, detail

    ok, detail, secs = _timed(run)
    return CriterionResult("octahedron and BS cube", ok, detail, secs)


def criterion_classification() -> CriterionResult:
    """The classification table over GBS graphs and presentations."""

    def run():
        rows = []
        rows.append(gbs.classify_cstar(gbs.bs_graph(1, 2)).label() == "NotCstarSimple_SolvableBS(2)")
        rows.append(gbs.classify_cstar(gbs.bs_graph(2, 2)).label() == "NotCstarSimple_Unimodular")
        rows.append(gbs.classify_cstar(gbs.bs_graph(1, 1)).label() == "NotCstarSimple_Unimodular")
        rows.append(gbs.classify_cstar(gbs.bs_graph(2, 3)).label() == "CstarSimple")
        trefoil_graph = gbs.GBSGraph(2, ((0, 1, 3, 2),))
        rows.append(gbs.classify_cstar(trefoil_graph).label() == "NotCstarSimple_Unimodular")
        rows.append(
            one_relator.classify(parse_presentation("< a, b, c | a b a^-1 b^-1 >")).label()
            == "CstarSimple"
        )
        rows.append(
            one_relator.classify(parse_presentation("< a, b | a b a b >")).label()
            == "CstarSimple"
        )
        rows.append(
            one_relator.classify(parse_presentation("< a, t | t a t^-1 a^-2 >")).label()
            == "NotCstarSimple_SolvableBS(2)"
        )
        # P_nai consistency: GBS-style verdicts force No
        rows.append(one_relator.p_nai(parse_presentation("< a, t | t a t^-1 a^-2 >")) == "No")
        rows.append(one_relator.p_nai(parse_presentation("< a, t | t a t^-1 a^-1 >")) == "No")
        rows.append(one_relator.p_nai(parse_presentation("< a, b, c | a b a^-1 b^-1 >")) == "Yes")
        rows.append(not gbs.p_nai_verdict(gbs.bs_graph(1, 2)))
        rows.append(not gbs.p_nai_verdict(gbs.bs_graph(2, 3)))
        rows.append(not gbs.p_nai_verdict(trefoil_graph))
        return all(rows), f"{sum(rows)}/{len(rows)} table rows hold"

    ok, detail, secs = _timed(run)
    return CriterionResult("classification table", ok, detail, secs)


def criterion_word_problem_oracles(
    max_vertices: int = 4, word_len: int = 6, samples: int = 20
) -> CriterionResult:
    """Trace equality and the RAAG word problem against closure oracles on
    every labelled graph with <= max_vertices vertices; Stallings
    intersection against double membership on seeded random subgroups."""

    def run():
        graphs = all_graphs(max_vertices)
        trace_ok = True
        for g in graphs:
            agree, _ = swap_closure_check(g, word_len)
            trace_ok = trace_ok and agree

        raag_ok = True
        words_by_size: dict[int, list] = {}
        for g in graphs:
            words = words_by_size.setdefault(g.n, reduced_signed_words(g.n, word_len))
            trivial = trivial_word_closure(g, word_len)
            adj = g.adjacency_masks()
            for w in words:
                if (not raag.shuffle_reduce(w, adj)) != (w in trivial):
                    raag_ok = False

        rng = random.Random(20260809)
        stallings_ok = True
        test_words = [
            FreeWord(tuple((letter >> 1, -1 if letter & 1 else 1) for letter in w))
            for w in reduced_signed_words(2, word_len)
        ]
        for _ in range(samples):
            gens1 = [_random_word(rng) for _ in range(rng.randint(1, 3))]
            gens2 = [_random_word(rng) for _ in range(rng.randint(1, 3))]
            sg1 = stallings.from_generators(2, gens1)
            sg2 = stallings.from_generators(2, gens2)
            inter = stallings.intersect(sg1, sg2)
            for w in test_words:
                both = stallings.contains(sg1, w) and stallings.contains(sg2, w)
                if stallings.contains(inter, w) != both:
                    stallings_ok = False
        ok = trace_ok and raag_ok and stallings_ok
        detail = (
            f"graphs={len(graphs)} trace-agree={trace_ok} raag-agree={raag_ok} "
            f"stallings-agree={stallings_ok}"
        )
        return ok, detail

    ok, detail, secs = _timed(run)
    return CriterionResult("word problem oracle equivalence", ok, detail, secs)


def _random_word(rng: random.Random) -> FreeWord:
    length = rng.randint(1, 5)
    letters = []
    for _ in range(length):
        letters.append((rng.randint(0, 1), rng.choice((1, -1))))
    return FreeWord(tuple(letters))


def criterion_free_powers_and_bb(max_bb_len: int = 6) -> CriterionResult:
    """find_free_power on (a, b, ab) returns 2 with the rank confirmed by an
    independent fold; no short word in the degree-zero basis of A(P_4) dies."""

    def run():
        a, b = gen(0), gen(1)
        ab = a * b
        r = stallings.find_free_power(2, [a, b, ab], 3)
        squares = [w**2 for w in (a, b, ab)]
        lib_rank = stallings.subgroup_rank(stallings.from_generators(2, squares))
        oracle_rank = naive_fold_rank(2, squares)
        rank1 = stallings.subgroup_rank(stallings.from_generators(2, [a, b, ab]))
        power_ok = r == 2 and lib_rank == 3 and oracle_rank == 3 and rank1 == 2

        p4 = path_graph(4)
        basis = raag.bb_basis(4)
        bb_ok = True
        for w in reduced_signed_words(3, max_bb_len):
            if not w:
                continue
            letters = []
            for letter in w:
                img = basis[letter >> 1]
                letters.extend((img.inverse() if letter & 1 else img).letters)
            if raag.is_trivial_word(p4, FreeWord(tuple(letters))):
                bb_ok = False
        ok = power_ok and bb_ok
        detail = (
            f"free-power-r={r} rank(squares)={lib_rank} oracle-rank={oracle_rank} "
            f"bb-free-up-to-{max_bb_len}={bb_ok}"
        )
        return ok, detail

    ok, detail, secs = _timed(run)
    return CriterionResult("free powers and degree-zero basis", ok, detail, secs)


def run_all(scale: int | None = None) -> list[CriterionResult]:
    """Run every criterion; scale (if given) caps the enumeration depths for
    a faster smoke run."""

    def cap(value: int) -> int:
        return min(value, scale) if scale is not None else value

    return [
        criterion_phi_p4(max_len=cap(8), oracle_len=cap(5)),
        criterion_bs_free_submonoid(max_len=cap(10)),
        criterion_trefoil(max_inj=cap(6), max_ker=cap(4)),
        criterion_hnn(max_len=cap(5)),
        criterion_octahedron_and_cube(max_len=cap(8)),
        criterion_classification(),
        criterion_word_problem_oracles(word_len=cap(6)),
        criterion_free_powers_and_bb(max_bb_len=cap(6)),
    ]
