"""Deterministic command-line frontend.

Exit codes: 0 success / verified, 1 verification failure (a collision or
kernel witness where none was expected), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import embeddings, gbs, graphs, one_relator, raag, stallings, trace, verification
from .concrete_groups import (
    bs_from_word,
    hnn_from_word,
    trefoil_from_word,
)
from .embeddings import render_hnn, render_trefoil
from .errors import GraphGroupsError
from .words import Alphabet, from_positive, parse_word, positive, word_to_text

BS_ALPHABET = Alphabet(("a", "t"))
TREFOIL_ALPHABET = Alphabet(("x", "y"))
HNN_ALPHABET = Alphabet(("x", "y", "t"))

INJECTIVE_MAPS = {
    "phi-p4": embeddings.phi_p4_map,
    "bs-cube": embeddings.bs_cube_map,
    "trefoil-p3": embeddings.trefoil_p3_map,
    "hnn-p4": embeddings.hnn_p4_map,
}
KERNEL_MAPS = {
    "trefoil-p3": embeddings.trefoil_p3_map,
    "hnn-p4": embeddings.hnn_p4_map,
}


def _load_graph(path: str) -> graphs.SimpGraph:
    return graphs.parse_graph(Path(path).read_text())


def _graph_alphabet(g: graphs.SimpGraph) -> Alphabet:
    return Alphabet(g.vertex_names)


def _positive_word(text: str, g: graphs.SimpGraph):
    w = parse_word(text, _graph_alphabet(g))
    p = positive(w)
    if p is None:
        raise GraphGroupsError("trace words must be positive (no inverse letters)")
    return p


def _free_letters(rank: int) -> Alphabet:
    return Alphabet(tuple(chr(ord("a") + i) for i in range(rank)))


def _group_ops(name: str):
    """(alphabet, eval, render, equality-by-value) for a named group."""
    if name.startswith("bs:"):
        n = int(name[3:])
        return BS_ALPHABET, (lambda w: bs_from_word(n, w)), (lambda e: f"k={e.k} b={e.b}")
    if name == "trefoil":
        return TREFOIL_ALPHABET, trefoil_from_word, render_trefoil
    if name == "hnn-trefoil":
        return HNN_ALPHABET, hnn_from_word, render_hnn
    raise GraphGroupsError(f"unknown group {name!r}; use bs:<n>, trefoil or hnn-trefoil")


def _print_stallings(sg: stallings.StallingsGraph) -> None:
    names = _free_letters(sg.ambient_rank).names
    print(
        f"vertices={sg.num_vertices} edges={len(sg.edges)} "
        f"rank={stallings.subgroup_rank(sg)}"
    )
    for u, v, lab in sorted(sg.edges):
        print(f"edge: {u} {v} {names[lab]}")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="graphgroups", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="canonical normal form of a word")
    p.add_argument("kind", choices=["trace", "raag"])
    p.add_argument("--graph", required=True)
    p.add_argument("word")

    p = sub.add_parser("eq", help="equality of two words")
    p.add_argument("kind", choices=["trace", "raag", "group"])
    p.add_argument("--graph")
    p.add_argument("--group", help="bs:<n> | trefoil | hnn-trefoil")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("graph", help="graph predicates")
    p.add_argument("kind", choices=["forest", "diam", "induced-path"])
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, default=4, help="path length for induced-path")

    p = sub.add_parser("stallings", help="subgroup graphs of free groups")
    p.add_argument("kind", choices=["rank", "member", "intersect", "findpower"])
    p.add_argument("--rank", type=int, required=True, help="ambient free rank")
    p.add_argument("--gen", action="append", default=[], help="subgroup generator word")
    p.add_argument("--gen2", action="append", default=[], help="second subgroup (intersect)")
    p.add_argument("--rmax", type=int, default=10, help="power bound for findpower")
    p.add_argument("--word", help="word to test for member")

    p = sub.add_parser("group", help="evaluate a word in a concrete group")
    p.add_argument("name", help="bs:<n> | trefoil | hnn-trefoil")
    p.add_argument("action", choices=["eval"])
    p.add_argument("word")

    p = sub.add_parser("gbs", help="classify a GBS graph file")
    p.add_argument("action", choices=["classify"])
    p.add_argument("file")

    p = sub.add_parser("classify", help="classify a one-relator presentation")
    p.add_argument("presentation")
    p.add_argument("--p-nai", action="store_true", help="also print the P_nai verdict")

    p = sub.add_parser("embed", help="apply one of the explicit embeddings")
    p.add_argument("kind", choices=["phi-p4", "paris", "star", "forest"])
    p.add_argument("--graph", help="source graph (paris, forest)")
    p.add_argument("--leaves", type=int, default=2, help="number of star leaves")
    p.add_argument("word")

    p = sub.add_parser("verify", help="bounded verification runs")
    p.add_argument("kind", choices=["paper", "injective", "no-kernel"])
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--map", default=None, help="|".join(INJECTIVE_MAPS))

    p = sub.add_parser("explore", help="search candidate generating quadruples")
    p.add_argument("kind", choices=["prop14"])
    p.add_argument("--bound", type=int, default=3, help="exponent bound |k|,...,|n|")
    p.add_argument("--max-len", type=int, default=2)

    return top


def _cmd_nf(args) -> int:
    g = _load_graph(args.graph)
    if args.kind == "trace":
        t = trace.normalize(g, _positive_word(args.word, g))
        print(t.text())
    else:
        e = raag.normalize(g, parse_word(args.word, _graph_alphabet(g)))
        print(e.text())
    return 0


def _cmd_eq(args) -> int:
    if args.kind == "group":
        if not args.group:
            raise GraphGroupsError("eq group needs --group")
        alphabet, evaluate, _ = _group_ops(args.group)
        r = evaluate(parse_word(args.word1, alphabet)) == evaluate(
            parse_word(args.word2, alphabet)
        )
    else:
        if not args.graph:
            raise GraphGroupsError("eq trace|raag needs --graph")
        g = _load_graph(args.graph)
        if args.kind == "trace":
            r = trace.equal(
                trace.normalize(g, _positive_word(args.word1, g)),
                trace.normalize(g, _positive_word(args.word2, g)),
            )
        else:
            alphabet = _graph_alphabet(g)
            r = raag.equal(
                raag.normalize(g, parse_word(args.word1, alphabet)),
                raag.normalize(g, parse_word(args.word2, alphabet)),
            )
    print(f"equal={'true' if r else 'false'}")
    return 0


def _cmd_graph(args) -> int:
    g = _load_graph(args.graph)
    if args.kind == "forest":
        print(f"forest={'true' if graphs.is_forest(g) else 'false'}")
    elif args.kind == "diam":
        print(f"d={graphs.max_component_diameter(g)}")
    else:
        found = graphs.find_induced_path(g, args.n)
        if found is None:
            print("path=none")
        else:
            print("path=" + " ".join(g.vertex_names[v] for v in found))
    return 0


def _cmd_stallings(args) -> int:
    alphabet = _free_letters(args.rank)
    gens = [parse_word(text, alphabet) for text in args.gen]
    sg = stallings.from_generators(args.rank, gens)
    if args.kind == "rank":
        _print_stallings(sg)
    elif args.kind == "member":
        if args.word is None:
            raise GraphGroupsError("stallings member needs a word argument")
        w = parse_word(args.word, alphabet)
        print(f"member={'true' if stallings.contains(sg, w) else 'false'}")
    elif args.kind == "intersect":
        gens2 = [parse_word(text, alphabet) for text in args.gen2]
        sg2 = stallings.from_generators(args.rank, gens2)
        _print_stallings(stallings.intersect(sg, sg2))
    else:
        r = stallings.find_free_power(args.rank, gens, args.rmax)
        print(f"r={r if r is not None else 'none'}")
    return 0


def _cmd_group(args) -> int:
    alphabet, evaluate, render = _group_ops(args.name)
    print(render(evaluate(parse_word(args.word, alphabet))))
    return 0


def _cmd_gbs(args) -> int:
    g = gbs.parse_gbs(Path(args.file).read_text())
    print(gbs.classify_cstar(g).line())
    return 0


def _cmd_classify(args) -> int:
    p = one_relator.parse_presentation(args.presentation)
    print(one_relator.classify(p).line())
    if args.p_nai:
        print(f"p_nai={one_relator.p_nai(p)}")
    return 0


def _cmd_embed(args) -> int:
    if args.kind == "phi-p4":
        g = graphs.path_graph(4)
        t = trace.normalize(g, _positive_word(args.word, g))
        print(embeddings.FreeMonoidCube().render(embeddings.phi_p4(t)))
    elif args.kind == "paris":
        if not args.graph:
            raise GraphGroupsError("embed paris needs --graph")
        g = _load_graph(args.graph)
        print(embeddings.paris(g, _positive_word(args.word, g)).text())
    elif args.kind == "star":
        k = args.leaves
        star = embeddings.star_graph(k)
        w = parse_word(args.word, Alphabet(star.vertex_names))
        print(embeddings.star_embed(k, w).text())
    else:
        if not args.graph:
            raise GraphGroupsError("embed forest needs --graph")
        g = _load_graph(args.graph)
        w = parse_word(args.word, _graph_alphabet(g))
        print(embeddings.forest_embed(g, w).text())
    return 0


def _cmd_verify(args) -> int:
    if args.kind == "paper":
        results = verification.run_all(scale=args.max_len)
        for res in results:
            print(res.line())
        return 0 if all(res.ok for res in results) else 1
    if args.kind == "injective":
        name = args.map or "phi-p4"
        if name not in INJECTIVE_MAPS:
            raise GraphGroupsError(f"unknown map {name!r} for verify injective")
        report = embeddings.verify_monoid_injective(
            INJECTIVE_MAPS[name](), args.max_len if args.max_len is not None else 6
        )
    else:
        name = args.map or "trefoil-p3"
        if name not in KERNEL_MAPS:
            raise GraphGroupsError(f"unknown map {name!r} for verify no-kernel")
        report = embeddings.verify_no_kernel(
            KERNEL_MAPS[name](), args.max_len if args.max_len is not None else 3
        )
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_explore(args) -> int:
    a, b, c, d = embeddings.hnn_generators()
    target = embeddings.HnnTrefoilTarget()
    bound = args.bound
    exponents = [e for e in range(-bound, bound + 1) if e != 0]
    clean = 0
    for k in exponents:
        for l in exponents:
            for m in exponents:
                for n in exponents:
                    mapping = embeddings.prop14_map(target, a, b, c, d, k, l, m, n)
                    report = embeddings.verify_no_kernel(mapping, args.max_len)
                    if report.ok:
                        clean += 1
                    print(
                        f"k={k} l={l} m={m} n={n} "
                        f"kernel={len(report.kernel)} checked={report.checked}"
                    )
    total = len(exponents) ** 4
    print(f"summary clean={clean}/{total} max-len={args.max_len} (bounded evidence only)")
    return 0


_HANDLERS = {
    "nf": _cmd_nf,
    "eq": _cmd_eq,
    "graph": _cmd_graph,
    "stallings": _cmd_stallings,
    "group": _cmd_group,
    "gbs": _cmd_gbs,
    "classify": _cmd_classify,
    "embed": _cmd_embed,
    "verify": _cmd_verify,
    "explore": _cmd_explore,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (GraphGroupsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
