"""Unit tests for braid words, Burau matrices, pair subsets and winding numbers"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from level4_braids.braids import *
from level4_braids.errors import ConjugationMismatch, NotInStabilizer, ParseError


class TestBraidWord:
    """Test braid words over half-twists"""
    def test_str_and_parse(self):
        w = BraidWord(3, [(1, 1), (2, -1)])
        assert str(w) == "s1 S2"
        assert BraidWord.parse("s1 S2", 3) == w
        assert BraidWord.parse("e", 3) == BraidWord(3)
        assert str(BraidWord(3)) == "e"

    @pytest.mark.parametrize("text", ["x1", "s", "s1 t2"])
    def test_parse_rejects_bad_letters(self, text):
        with pytest.raises(ParseError):
            BraidWord.parse(text, 3)

    def test_parse_rejects_out_of_range(self):
        with pytest.raises(ParseError):
            BraidWord.parse("s3", 3)

    def test_invalid_arguments(self):
        with pytest.raises(TypeError):
            BraidWord("3")
        with pytest.raises(ValueError):
            BraidWord(0)
        with pytest.raises(ValueError):
            BraidWord(3, [(1, 2)])

    def test_inverse_and_power(self):
        w = BraidWord.parse("s1 s2", 3)
        assert str(w.inverse()) == "S2 S1"
        assert str(w.power(2)) == "s1 s2 s1 s2"
        assert w.power(-1) == w.inverse()
        assert len(w.power(0)) == 0

    def test_permutation(self):
        assert BraidWord.sigma(1, 3).permutation() == (2, 1, 3)
        assert BraidWord.parse("s1 s1", 2).is_pure()
        assert BraidWord.parse("s1 s2", 3).permutation() == (2, 3, 1)

    @pytest.mark.parametrize("perm", list(permutations(range(1, 5))))
    def test_permutation_braid(self, perm):
        assert permutation_braid(perm).permutation() == perm

    def test_named_words(self):
        assert str(artin_generator(1, 2, 3)) == "s1 s1"
        assert str(artin_generator(1, 3, 3)) == "s2 s1 s1 S2"
        assert str(half_twist(1, 3, 3)) == "s2 s1 S2"
        squared = half_twist(1, 3, 4).power(2)
        assert artin_generator(1, 3, 4).permutation() == squared.permutation() == (1, 2, 3, 4)
        for m in (0, 4):
            assert burau_mod(artin_generator(1, 3, 4), m) == burau_mod(squared, m)

    def test_products_keep_letters(self):
        w = half_twist(1, 3, 4)
        assert len(w * w.inverse()) == 2 * len(w)
        assert burau_mod(w * w.inverse(), 0).is_identity()

    def test_embed(self):
        assert BraidWord.sigma(1, 2).embed(4).n == 4
        with pytest.raises(ValueError):
            BraidWord.sigma(1, 3).embed(2)


class TestPureBraidWord:
    """Test pure braid words over Artin generators"""
    def test_parse_round_trip(self):
        w = PureBraidWord.parse("A(1,2)^2 A(1,3)^-1", 3)
        assert str(w) == "A(1,2)^2 A(1,3)^-1"
        assert PureBraidWord.parse("A(2,1)", 3) == PureBraidWord.generator(1, 2, 3)

    def test_parse_rejects(self):
        with pytest.raises(ParseError):
            PureBraidWord.parse("A(1,2", 3)
        with pytest.raises(ParseError):
            PureBraidWord.parse("A(1,4)", 3)

    def test_product_reduces_freely(self):
        a = PureBraidWord.generator(1, 2, 3)
        assert str(a * a) == "A(1,2)^2"
        assert a * a.inverse() == PureBraidWord(3)
        assert a.power(3).exponent_sums() == {(1, 2): 3}

    def test_unit_letters(self):
        w = PureBraidWord.parse("A(1,2)^2 A(2,3)^-1", 3)
        assert w.unit_letters() == [((1, 2), 1), ((1, 2), 1), ((2, 3), -1)]

    def test_to_braid_word_is_pure(self, rng):
        for _ in range(10):
            assert random_pure_word(4, 6, rng, max_exponent=2).to_braid_word().is_pure()

    def test_commutator_and_conjugate(self):
        x, y = PureBraidWord.generator(1, 2, 3), PureBraidWord.generator(2, 3, 3)
        assert str(commutator(x, y)) == "A(1,2) A(2,3) A(1,2)^-1 A(2,3)^-1"
        assert conjugate(x, x) == x

    def test_full_twist(self):
        assert str(full_twist(3)) == "A(1,2) A(1,3) A(2,3)"
        assert len(full_twist(5)) == 10


class TestBurau:
    """Test the Burau representation at t = -1"""
    def test_sigma_mod_4(self):
        assert burau_mod(BraidWord.sigma(1, 2), 4).entries == ((2, 3), (1, 0))

    def test_homomorphism(self, rng):
        for _ in range(5):
            u, v = random_braid_word(4, 7, rng), random_braid_word(4, 7, rng)
            assert burau_mod(u * v, 8) == burau_mod(u, 8) @ burau_mod(v, 8)

    def test_braid_relations(self):
        lhs = burau_mod(BraidWord.parse("s1 s2 s1", 3), 0)
        assert lhs == burau_mod(BraidWord.parse("s2 s1 s2", 3), 0)
        assert burau_mod(BraidWord.parse("s1 s3", 4), 0) == burau_mod(BraidWord.parse("s3 s1", 4), 0)

    def test_full_twist_is_central(self):
        delta = full_twist(4).to_braid_word()
        for k in range(1, 4):
            s = BraidWord.sigma(k, 4)
            assert burau_mod(s * delta, 0) == burau_mod(delta * s, 0)

    def test_level_four(self):
        for i, j in [(1, 2), (1, 3), (2, 4)]:
            assert level_membership(PureBraidWord.generator(i, j, 4, 2), 4)
            assert not level_membership(PureBraidWord.generator(i, j, 4), 4)
            assert level_membership(PureBraidWord.generator(i, j, 4), 2)
        assert not level_membership(BraidWord.sigma(1, 4), 2)
        assert level_membership(BraidWord.sigma(1, 4), 1)

    def test_random_level4_words(self):
        for seed in range(5):
            w = random_level4_word(4, np.random.default_rng(seed))
            assert level_membership(w, 4)

    def test_reduce_and_permutation(self):
        m = burau_mod(BraidWord.sigma(1, 3), 4)
        assert m.permutation() == (2, 1, 3)
        assert m.reduce(2) == burau_mod(BraidWord.sigma(1, 3), 2)
        with pytest.raises(ValueError):
            m.reduce(3)

    def test_invalid_modulus(self):
        with pytest.raises(ValueError):
            burau_mod(BraidWord(2), -1)
        with pytest.raises(ValueError):
            level_membership(BraidWord(2), 0)


class TestPairSubset:
    """Test pair subsets and their orbits"""
    def test_canonical_pairs(self):
        I = PairSubset(4, [(2, 3), (3, 1)])
        assert I.pairs == ((1, 3), (2, 3))
        assert I.is_full(3)
        assert (3, 1) in I
        assert str(I) == "{13,23}"

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            PairSubset(3, [(1, 4)])

    @pytest.mark.parametrize(("subset", "size"), [(I3(3), 3), (I3(4), 12), (I4(4), 3)])
    def test_orbit_sizes(self, subset, size):
        assert len(subset.orbit()) == size

    def test_stabilizer(self):
        assert I3().is_stabilized_by((2, 1, 3))
        assert not I3().is_stabilized_by((1, 3, 2))


class TestWinding:
    """Test winding numbers and the homomorphisms ω_3, ω_4"""
    def test_single_crossing(self):
        assert winding(BraidWord.sigma(1, 2), 1, 2) == Fraction(1, 2)

    def test_artin_generator(self):
        w = PureBraidWord.generator(1, 3, 3)
        assert winding_numbers(w) == {(1, 3): Fraction(1)}
        assert winding(w.power(2), 1, 3) == 2
        assert winding(w, 2, 3) == 0

    def test_omega_rho(self):
        assert omega_rho(PureBraidWord.generator(1, 3, 3), 3) == (1, -1)
        assert omega_rho(PureBraidWord.generator(1, 2, 3), 3) == (0, 1)
        assert omega_rho(BraidWord.sigma(1, 3), 3) == (0, 1)

    def test_outside_stabilizer(self):
        with pytest.raises(NotInStabilizer):
            omega_rho(BraidWord.sigma(2, 3), 3)
        with pytest.raises(ValueError):
            stabilizer_subset(5, 5)


class TestConjugation:
    """Test conjugation of pure words by half-twists"""
    def test_table(self):
        assert twist_conjugate(1, 1, 2, 3) == TwistConjugate((1, 3), (1, 2), 1)
        assert twist_conjugate(3, 1, 1, 2) == TwistConjugate((1, 2))

    def test_conj_pure(self):
        assert str(conj_pure(1, PureBraidWord.generator(1, 4, 4))) == "A(2,4)"

    def test_random_conjugates_pass_the_check(self, rng):
        for _ in range(5):
            g = random_braid_word(4, 5, rng)
            w = random_pure_word(4, 3, rng)
            try:
                conjugate_pure(g, w)
            except ConjugationMismatch as e:
                pytest.fail(str(e))
