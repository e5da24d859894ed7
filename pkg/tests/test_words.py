import pytest
from hypothesis import given, strategies as st

from graphgroups.errors import (
    EmptyWord,
    MalformedToken,
    NotCyclicallyReduced,
    UnknownGenerator,
    ZeroExponent,
)
from graphgroups.words import (
    Alphabet,
    FreeWord,
    cyclically_reduce,
    exponent_sum,
    gen,
    parse_word,
    primitive_root,
    reduce,
    translation_length,
    word_to_text,
)

AB = Alphabet(("a", "b"))
AT = Alphabet(("a", "t"))


def lets(*pairs):
    return FreeWord(tuple(pairs))


words_strategy = st.builds(
    FreeWord,
    st.tuples() | st.lists(
        st.tuples(st.integers(0, 2), st.sampled_from((1, -1))), max_size=12
    ).map(tuple),
)


class TestParse:
    def test_expansion(self):
        assert parse_word("a b^-2", AB).letters == ((0, 1), (1, -1), (1, -1))

    def test_positive_power(self):
        assert parse_word("a^3", AB).letters == ((0, 1),) * 3

    def test_unknown_generator(self):
        with pytest.raises(UnknownGenerator):
            parse_word("c", AB)

    def test_zero_exponent(self):
        with pytest.raises(ZeroExponent):
            parse_word("a^0", AB)

    def test_malformed(self):
        with pytest.raises(MalformedToken):
            parse_word("a^", AB)
        with pytest.raises(MalformedToken):
            parse_word("a^b", AB)

    def test_alphabet_validation(self):
        with pytest.raises(MalformedToken):
            Alphabet(("a", "a"))
        with pytest.raises(MalformedToken):
            Alphabet(("a^",))

    @given(words_strategy)
    def test_round_trip(self, w):
        al = Alphabet(("a", "b", "c"))
        assert parse_word(word_to_text(w, al), al).letters == w.letters


class TestReduce:
    def test_cancel_to_empty(self):
        assert reduce(lets((0, 1), (0, -1))).letters == ()

    def test_inner_cancel(self):
        assert reduce(lets((0, 1), (1, 1), (1, -1), (0, 1))).letters == ((0, 1), (0, 1))

    def test_leading_cancel(self):
        assert reduce(lets((0, -1), (0, 1), (1, 1))).letters == ((1, 1),)

    @given(words_strategy)
    def test_idempotent(self, w):
        assert reduce(reduce(w)) == reduce(w)

    @given(words_strategy)
    def test_inverse_cancels(self, w):
        assert reduce(w * reduce(w).inverse()).letters == ()


class TestCyclicReduce:
    def test_conjugate(self):
        core, conj = cyclically_reduce(lets((0, -1), (1, 1), (0, 1)))
        assert core.letters == ((1, 1),)
        assert conj.letters == ((0, -1),)

    def test_already_reduced(self):
        w = lets((1, 1), (0, 1), (1, -1), (0, -1))
        core, conj = cyclically_reduce(w)
        assert core == w and conj.letters == ()

    def test_empty(self):
        assert cyclically_reduce(FreeWord()) == (FreeWord(), FreeWord())

    @given(words_strategy)
    def test_soundness(self, w):
        core, conj = cyclically_reduce(w)
        assert reduce(conj * core * conj.inverse()) == reduce(w)

    def test_translation_length(self):
        assert translation_length(lets((0, -1), (1, 1), (0, 1))) == 1
        assert translation_length(lets((0, 1), (1, 1))) == 2
        assert translation_length(lets((0, 1), (0, -1))) == 0


class TestPrimitiveRoot:
    def test_square(self):
        root, e = primitive_root(parse_word("a b a b", AB))
        assert e == 2 and root.letters == ((0, 1), (1, 1))

    def test_not_a_power(self):
        # t a t^-1 a^-2 is cyclically reduced and not a proper power
        root, e = primitive_root(parse_word("t a t^-1 a^-2", AT))
        assert e == 1

    def test_sixth_power(self):
        root, e = primitive_root(parse_word("a^6", AB))
        assert e == 6 and root.letters == ((0, 1),)

    def test_errors(self):
        with pytest.raises(EmptyWord):
            primitive_root(FreeWord())
        with pytest.raises(NotCyclicallyReduced):
            primitive_root(lets((0, 1), (1, 1), (0, -1)))

    @given(words_strategy.map(lambda w: cyclically_reduce(w)[0]))
    def test_soundness(self, w):
        if not w.letters:
            return
        root, e = primitive_root(w)
        assert root.letters * e == w.letters
        # no shorter period works
        n = len(w.letters)
        for d in range(1, n // e):
            if n % d == 0:
                assert w.letters[:d] * (n // d) != w.letters


class TestExponentSum:
    def test_examples(self):
        w = parse_word("t^-2 a t^5", AT)
        assert exponent_sum(w, 1) == 3
        assert exponent_sum(parse_word("a b a^-1", AB), 0) == 0
        assert exponent_sum(FreeWord(), 0) == 0

    @given(words_strategy, words_strategy, st.integers(0, 2))
    def test_homomorphism(self, u, v, g):
        assert exponent_sum(u * v, g) == exponent_sum(u, g) + exponent_sum(v, g)


def test_gen_powers():
    assert gen(1, -2).letters == ((1, -1), (1, -1))
    assert (gen(0) * gen(1)) ** 2 == parse_word("a b a b", AB)
