"""One-relator presentations and the decidable part of their classification.

``classify`` decides C*-simplicity except for two-generator relators that are
neither proper powers nor syntactic Baumslag-Solitar relators; those land on
Unknown (deciding them in general needs Magnus-subgroup machinery that is out
of scope here).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gbs
from .errors import MalformedPresentation
from .gbs import (
    VERDICT_CSTAR_SIMPLE,
    VERDICT_CYCLIC,
    VERDICT_UNKNOWN,
    Classification,
    bs_graph,
)
from .words import (
    Alphabet,
    FreeWord,
    cyclically_reduce,
    parse_word,
    primitive_root,
    word_to_text,
)

P_NAI_YES = "Yes"
P_NAI_NO = "No"
P_NAI_UNKNOWN = "Unknown"


@dataclass(frozen=True)
class OneRelatorPresentation:
    """<x_1, ..., x_k | W> with W stored cyclically reduced."""

    alphabet: Alphabet
    relator: FreeWord

    def __post_init__(self):
        core, _ = cyclically_reduce(self.relator)
        object.__setattr__(self, "relator", core)

    @property
    def k(self) -> int:
        return len(self.alphabet)

    def text(self) -> str:
        gens = ", ".join(self.alphabet.names)
        if not self.relator:
            return f"< {gens} | >"
        return f"< {gens} | {word_to_text(self.relator, self.alphabet)} >"


def parse_presentation(text: str) -> OneRelatorPresentation:
    """Parse `< g1, g2, ... | word >`; an empty word gives a free group."""
    s = text.strip()
    if not s.startswith("<") or not s.endswith(">"):
        raise MalformedPresentation("presentation must be wrapped in < >")
    body = s[1:-1]
    if body.count("|") != 1:
        raise MalformedPresentation("presentation needs exactly one | separator")
    gens_part, relator_part = body.split("|")
    names = tuple(name.strip() for name in gens_part.split(",") if name.strip())
    if not names:
        raise MalformedPresentation("presentation needs at least one generator")
    alphabet = Alphabet(names)
    relator = parse_word(relator_part, alphabet)
    return OneRelatorPresentation(alphabet, relator)


def _match_bs_relator(relator: FreeWord) -> tuple[int, int] | None:
    """Match t a^m t^-1 a^-n up to rotation, inversion and generator roles.

    Returns the (m, n) of a matched loop; BS data equivalent under the
    symmetries differ only by swapping or negating both of (m, n), which
    never changes the classification.
    """
    for base in (relator, relator.inverse()):
        letters = base.letters
        size = len(letters)
        for shift in range(size):
            rot = letters[shift:] + letters[:shift]
            u, sigma = rot[0]
            # locate the closing letter of the conjugating generator
            closing = [p for p in range(1, size) if rot[p][0] == u]
            if len(closing) != 1 or rot[closing[0]][1] != -sigma:
                continue
            p = closing[0]
            first, second = rot[1:p], rot[p + 1 :]
            if not first or not second:
                continue
            v1 = {g for g, _ in first} | {g for g, _ in second}
            if len(v1) != 1 or u in v1:
                continue
            s1 = {s for _, s in first}
            s2 = {s for _, s in second}
            if len(s1) != 1 or len(s2) != 1:
                continue
            e1 = s1.pop() * len(first)
            e2 = s2.pop() * len(second)
            # sigma=+1: u v^e1 u^-1 v^e2 is the relator of BS(e1, -e2);
            # sigma=-1: u^-1 v^e1 u v^e2 is the relator of BS(-e2, e1).
            return (e1, -e2) if sigma > 0 else (-e2, e1)
    return None


def classify(p: OneRelatorPresentation) -> Classification:
    """Decision tree for C*-simplicity of the presented group."""
    if p.k == 1:
        return Classification(
            VERDICT_CYCLIC, "one generator presents a cyclic group, never C*-simple"
        )
    if p.k >= 3:
        return Classification(
            VERDICT_CSTAR_SIMPLE,
            "at least three generators: acylindrically hyperbolic with trivial "
            "finite radical, hence C*-simple",
        )
    if not p.relator:
        return Classification(
            VERDICT_CSTAR_SIMPLE,
            "free group of rank 2 (classical result, recorded as a convention here)",
        )
    _, exponent = primitive_root(p.relator)
    if exponent >= 2:
        return Classification(
            VERDICT_CSTAR_SIMPLE,
            f"relator is a proper power (exponent {exponent}): the group is "
            "hyperbolic with torsion, not a GBS group, hence C*-simple",
        )
    mn = _match_bs_relator(p.relator)
    if mn is not None:
        m, n = mn
        inner = gbs.classify_cstar(bs_graph(m, n))
        return Classification(
            inner.verdict,
            f"relator matches the BS({m},{n}) pattern; {inner.reason}",
            bs_n=inner.bs_n,
        )
    return Classification(
        VERDICT_UNKNOWN,
        "two-generator relator outside the decidable fragment (deciding it "
        "needs Magnus-subgroup intersection algorithms, not implemented)",
    )


def p_nai(p: OneRelatorPresentation) -> str:
    """Free-product richness: Yes / No / Unknown.

    A non-cyclic one-relator group has the property iff it is not a GBS
    group, so any verdict obtained through the BS matcher is a No even when
    the group is C*-simple.
    """
    if p.k == 1:
        return P_NAI_NO
    if p.k >= 3:
        return P_NAI_YES
    if not p.relator:
        return P_NAI_YES  # free of rank 2: classical
    _, exponent = primitive_root(p.relator)
    if exponent >= 2:
        return P_NAI_YES  # hyperbolic with torsion, not GBS, non-cyclic
    if _match_bs_relator(p.relator) is not None:
        return P_NAI_NO  # a GBS group, cyclic-commensurating
    return P_NAI_UNKNOWN
