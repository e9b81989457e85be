import math

import pytest
from hypothesis import given, settings, strategies as st

from kappaterms import (CapError, EvalError, ParseError, Window, BkPair,
                        concat, content, eval_term, expand, expand_clip,
                        expand_clip_right, finite_length, letter,
                        omega_minus_one, parse_term, to_text,
                        word_or_infinite, word_term, EMPTY, INFINITE,
                        GeneratorMap, adjoin_identity)
from kappaterms.terms import Concat
from kappaterms.catalog import cyclic, standard_fixtures, trivial


# a strategy for normal-form terms over the base alphabet
base_letters = st.sampled_from("abc").map(letter)
base_terms = st.recursive(
    base_letters,
    lambda children: st.one_of(
        st.lists(children, min_size=2, max_size=3).map(lambda l: concat(*l)),
        children.map(omega_minus_one),
    ),
    max_leaves=12,
)


class TestParsing:
    def test_plain_word(self):
        assert parse_term("a b a") == word_term("aba")

    def test_omega_sugar(self):
        t = parse_term("(a b)^w")
        ab = word_term("ab")
        assert t == concat(omega_minus_one(ab), ab)

    def test_omega_minus_sugar(self):
        t = parse_term("a^w-2")
        a = letter("a")
        assert t == concat(omega_minus_one(a), omega_minus_one(a))

    def test_omega_plus_sugar(self):
        t = parse_term("a^w+1")
        a = letter("a")
        assert t == concat(omega_minus_one(a), a, a)

    def test_numeric_unfolding(self):
        assert parse_term("a^3") == word_term("aaa")
        assert parse_term("(ab)^2") == word_term("abab")

    def test_zero_exponent(self):
        with pytest.raises(ParseError):
            parse_term("a^0")

    def test_unfold_cap(self):
        with pytest.raises(CapError):
            parse_term("a^20001")

    def test_garbage(self):
        for text in ["", "(", "a)", "a^", "[a]", "<ab>", "A"]:
            with pytest.raises(ParseError):
                parse_term(text)

    def test_window_atom(self):
        t = parse_term("[ab][bc]")
        assert t == word_term([Window("ab"), Window("bc")])

    def test_pair_atom_adopts_declared_k(self):
        t = parse_term("<,a><a,b>", k=2)
        assert t == word_term([BkPair("", "a", 2), BkPair("a", "b", 2)])

    def test_empty_atom(self):
        assert parse_term("1") == EMPTY
        assert parse_term("a1b") == word_term("ab")


class TestNormalForm:
    def test_concat_flattens(self):
        t = concat(word_term("ab"), concat(letter("c"), EMPTY))
        assert isinstance(t, Concat)
        assert all(not isinstance(p, Concat) for p in t.parts)
        assert t == word_term("abc")

    def test_empty_power_base_rejected(self):
        with pytest.raises(ValueError):
            omega_minus_one(EMPTY)

    @given(base_terms)
    def test_print_parse_round_trip(self, t):
        assert parse_term(to_text(t)) == t

    def test_round_trip_with_composite_symbols(self):
        t = concat(word_term([Window("abc")]),
                   omega_minus_one(word_term([BkPair("ab", "c", 2)])))
        assert parse_term(to_text(t), k=2) == t


class TestQueries:
    def test_content(self):
        assert content(parse_term("aba")) == frozenset("ab")
        assert content(parse_term("a^w-1")) == frozenset("a")
        assert content(EMPTY) == frozenset()

    def test_word_or_infinite(self):
        assert word_or_infinite(parse_term("aba")) == "aba"
        assert word_or_infinite(parse_term("a^w-1")) is INFINITE
        assert word_or_infinite(parse_term("a(b)^w-1c")) is INFINITE
        assert word_or_infinite(EMPTY) == ""

    def test_finite_length(self):
        assert finite_length(parse_term("abab")) == 4
        assert finite_length(parse_term("a^w")) is None


class TestExpansion:
    def test_power_expansion(self):
        assert expand(parse_term("(ab)^w-1"), 3) == "ababab"

    def test_word_unchanged(self):
        for e in (1, 2, 5):
            assert expand(parse_term("a"), e) == "a"

    def test_nested_expansion(self):
        assert expand(parse_term("(a^w-1b)^w-1"), 2) == "aabaab"

    def test_clip_matches_expand(self, rng):
        from kappaterms.catalog import random_term
        for _ in range(100):
            t = random_term(rng, "ab", 3)
            e = rng.randint(1, 4)
            full = expand(t, e)
            n = rng.randint(1, 12)
            assert expand_clip(t, e, n) == full[:n]
            assert expand_clip_right(t, e, n) == full[-n:]

    def test_word_case_equals_any_expansion(self, rng):
        from kappaterms.catalog import random_term
        for _ in range(50):
            t = random_term(rng, "ab", 3)
            w = word_or_infinite(t)
            if w is not INFINITE:
                assert expand(t, rng.randint(1, 5)) == w


class TestEvaluation:
    def test_group_inverse(self):
        s = cyclic(3)
        gens = GeneratorMap("a", {"a": 1})
        assert eval_term(parse_term("a^w-1"), s, gens) == 2

    def test_trivial_semigroup(self):
        s = trivial()
        gens = GeneratorMap("ab", {"a": 0, "b": 0})
        assert eval_term(parse_term("(ab)^w-1ab"), s, gens) == 0

    def test_idempotent_pattern(self, fixtures):
        for fx in fixtures:
            s, gens = fx.semigroup, fx.gens
            t = parse_term("a^w-1a")
            assert eval_term(t, s, gens) == s.omega_power(gens.images["a"])

    def test_empty_needs_adjoined_identity(self):
        s = cyclic(2)
        gens = GeneratorMap("a", {"a": 1})
        with pytest.raises(EvalError):
            eval_term(EMPTY, s, gens)
        s1 = adjoin_identity(s)
        gens1 = GeneratorMap("a", {"a": 2})
        assert eval_term(EMPTY, s1, gens1) == 0

    @given(base_terms, base_terms)
    @settings(max_examples=60)
    def test_eval_is_a_homomorphism(self, u, v):
        for fx in standard_fixtures()[:4]:
            images = {c: fx.gens.images[c] if c in fx.gens.images else 0
                      for c in "abc"}
            gens = GeneratorMap("abc", images)
            s = fx.semigroup
            assert eval_term(concat(u, v), s, gens) == \
                s.mul(eval_term(u, s, gens), eval_term(v, s, gens))

    def test_expansion_with_matched_exponent_preserves_value(self, fixtures, rng):
        from kappaterms.catalog import random_term
        for fx in fixtures:
            s, gens = fx.semigroup, fx.gens
            period = math.lcm(*(s.monogenic_profile(x).period
                                for x in s.elements()))
            e = period
            while e - 1 < s.order:
                e += period
            e -= 1  # e = m*lcm(periods) - 1 with m*lcm >= |S| + 1
            for _ in range(40):
                t = random_term(rng, "ab", 3)
                assert eval_term(word_term(expand(t, e)), s, gens) == \
                    eval_term(t, s, gens)
