"""Words in free groups and free monoids.

A :class:`FreeWord` is a (possibly unreduced) sequence of letters, each a
pair ``(generator index, sign)`` with sign +1 or -1.  Positive words (monoid
words) are plain tuples of generator indices.  Words never carry their
alphabet; an :class:`Alphabet` supplies names for parsing and printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    EmptyWord,
    MalformedToken,
    NotCyclicallyReduced,
    UnknownGenerator,
    ZeroExponent,
)

Letter = tuple[int, int]
PositiveWord = tuple[int, ...]

_FORBIDDEN = set("^,|<>")


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names; declaration order drives every normal form."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise MalformedToken("alphabet must contain at least one generator")
        seen = set()
        for name in self.names:
            if not name or any(ch.isspace() or ch in _FORBIDDEN for ch in name):
                raise MalformedToken(f"invalid generator name: {name!r}")
            if name == "1":
                raise MalformedToken("'1' is reserved for the empty word")
            if name in seen:
                raise MalformedToken(f"duplicate generator name: {name!r}")
            seen.add(name)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None


@dataclass(frozen=True)
class FreeWord:
    """A word in a free group, stored letter by letter, not auto-reduced."""

    letters: tuple[Letter, ...] = ()

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        if n < 0:
            return self.inverse() ** (-n)
        return FreeWord(self.letters * n)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def max_index(self) -> int:
        return max((g for g, _ in self.letters), default=-1)


EMPTY = FreeWord()


def word(*letters: Letter) -> FreeWord:
    return FreeWord(tuple(letters))


def gen(i: int, power: int = 1) -> FreeWord:
    """The word ``g_i^power``."""
    if power >= 0:
        return FreeWord(((i, 1),) * power)
    return FreeWord(((i, -1),) * (-power))


def positive(w: FreeWord) -> PositiveWord | None:
    """The underlying positive word, or None if an inverse letter occurs."""
    if any(s < 0 for _, s in w.letters):
        return None
    return tuple(g for g, _ in w.letters)


def from_positive(p: PositiveWord) -> FreeWord:
    return FreeWord(tuple((g, 1) for g in p))


_TOKEN = re.compile(r"^([^\^]+)(?:\^(-?\d+))?$")


def parse_word(text: str, alphabet: Alphabet) -> FreeWord:
    """Parse whitespace-separated ``name`` / ``name^k`` tokens (k != 0)."""
    letters: list[Letter] = []
    for token in text.split():
        if token == "1":  # the empty word
            continue
        m = _TOKEN.match(token)
        if not m:
            raise MalformedToken(f"malformed token {token!r}")
        name, exp_text = m.groups()
        idx = alphabet.index(name)
        if exp_text is None:
            exp = 1
        else:
            exp = int(exp_text)
            if exp == 0:
                raise ZeroExponent(f"zero exponent in token {token!r}")
        sign = 1 if exp > 0 else -1
        letters.extend([(idx, sign)] * abs(exp))
    return FreeWord(tuple(letters))


def word_to_text(w: FreeWord, alphabet: Alphabet) -> str:
    """Render a word in the syntax accepted by parse_word; empty word is '1'."""
    if not w.letters:
        return "1"
    parts: list[str] = []
    run_letter: Letter | None = None
    run_len = 0
    for letter in w.letters + ((-1, 0),):  # sentinel flushes the last run
        if letter == run_letter:
            run_len += 1
            continue
        if run_letter is not None:
            g, s = run_letter
            exp = s * run_len
            parts.append(alphabet.names[g] if exp == 1 else f"{alphabet.names[g]}^{exp}")
        run_letter, run_len = letter, 1
    return " ".join(parts)


def reduce(w: FreeWord) -> FreeWord:
    """Free reduction: cancel adjacent inverse pairs until none remain."""
    stack: list[Letter] = []
    for g, s in w.letters:
        if stack and stack[-1] == (g, -s):
            stack.pop()
        else:
            stack.append((g, s))
    return FreeWord(tuple(stack))


def is_reduced(w: FreeWord) -> bool:
    return all(
        w.letters[i] != (w.letters[i + 1][0], -w.letters[i + 1][1])
        for i in range(len(w.letters) - 1)
    )


def is_cyclically_reduced(w: FreeWord) -> bool:
    if not is_reduced(w):
        return False
    if len(w.letters) >= 2:
        g, s = w.letters[0]
        return w.letters[-1] != (g, -s)
    return True


def cyclically_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Return (core, conjugator) with core cyclically reduced and
    w = conjugator * core * conjugator^-1 in the free group."""
    core = list(reduce(w).letters)
    conj: list[Letter] = []
    while len(core) >= 2:
        g, s = core[0]
        if core[-1] == (g, -s):
            conj.append(core[0])
            core = core[1:-1]
        else:
            break
    return FreeWord(tuple(core)), FreeWord(tuple(conj))


def translation_length(w: FreeWord) -> int:
    """Cyclically reduced length: how far w translates along its axis in the
    Cayley tree (0 exactly for the identity)."""
    core, _ = cyclically_reduce(w)
    return len(core)


def primitive_root(w: FreeWord) -> tuple[FreeWord, int]:
    """Write a cyclically reduced word as root^e with e maximal.

    For cyclically reduced words this is a pure periodicity check on the
    letter sequence: e > 1 iff the word is a proper power in the free group.
    """
    if not w.letters:
        raise EmptyWord("primitive_root requires a non-empty word")
    if not is_cyclically_reduced(w):
        raise NotCyclicallyReduced("primitive_root requires a cyclically reduced word")
    n = len(w.letters)
    for d in range(1, n + 1):
        if n % d != 0:
            continue
        period = w.letters[:d]
        if period * (n // d) == w.letters:
            return FreeWord(tuple(period)), n // d
    raise AssertionError("unreachable: every word is its own 1st power")


def exponent_sum(w: FreeWord, g: int) -> int:
    return sum(s for h, s in w.letters if h == g)
