"""Unit tests for symmetric-group characters, class functions and Z_n classes"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from level4_braids.braids import I3, BraidWord, PZnElement, enumerate_zn
from level4_braids.errors import BoundExceeded, ShapeMismatch
from level4_braids.reps import *


class TestPartitions:
    """Test partitions and their padding"""
    def test_padded_partition(self):
        assert padded_partition((1,), 4) == (3, 1)
        assert padded_partition((), 3) == (3,)
        assert padded_partition((), 0) == ()
        with pytest.raises(ValueError):
            padded_partition((2,), 3)
        with pytest.raises(ValueError):
            padded_partition((1, 2), 5)

    def test_partitions(self):
        assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert partitions(0) == [()]

    @pytest.mark.parametrize(("shape", "dim"), [((3, 2), 5), ((2, 2), 2), ((3, 1, 1), 6), ((), 1)])
    def test_hook_dimension(self, shape, dim):
        assert hook_dimension(shape) == dim

    def test_cycles(self):
        assert cycle_type((2, 3, 1, 4)) == (3, 1)
        assert cycle_type(cycle_type_representative((2, 2, 1))) == (2, 2, 1)
        assert centralizer_order((2, 1, 1)) == 4


class TestCharacters:
    """Test S_k and ρ_I characters"""
    @pytest.mark.parametrize(("lam", "mu", "value"), [
        ((2, 1), (3,), -1),
        ((3, 1), (1, 1, 1, 1), 3),
        ((2, 2), (2, 2), 2),
        ((1, 1, 1), (2, 1), -1),
        ((4,), (2, 1, 1), 1),
    ])
    def test_sn_character(self, lam, mu, value):
        assert sn_character(lam, mu) == value

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_orthogonality(self, k):
        for a in partitions(k):
            for b in partitions(k):
                total = sum(Fraction(factorial(k), centralizer_order(mu)) * sn_character(a, mu) * sn_character(b, mu)
                            for mu in partitions(k))
                assert total / factorial(k) == (1 if a == b else 0)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            sn_character((2, 1), (2, 2))

    def test_rho_character(self):
        assert rho_character(I3(), PZnElement.from_pairs(3, [(1, 3)])) == -1
        assert rho_character(I3(), PZnElement.from_pairs(3, [(1, 3), (2, 3)])) == 1
        with pytest.raises(ValueError):
            rho_character(I3(4), PZnElement.from_pairs(3, [(1, 2)]))


class TestClasses:
    """Test conjugacy classes and module characters on Z_n"""
    def test_small_classes(self, zn3):
        assert len(conjugacy_classes(enumerate_zn(2))) == 4
        classes = conjugacy_classes(zn3)
        assert sum(classes.sizes) == 48
        assert classes.sizes[classes.identity_class] == 1

    def test_h1_character_norm(self, zn3):
        chi = zn_character(H1Module(3), zn3)
        assert chi.degree == 6
        assert chi.inner_product(chi) == 3

    def test_trivial_module(self, zn3):
        chi = zn_character(MatrixModule.trivial(3), zn3)
        assert chi.inner_product(chi) == 1

    def test_word_trace(self):
        assert H1Module(3).word_trace(BraidWord(3)) == 6
        assert MatrixModule.trivial(3).dim == 1
        with pytest.raises(ValueError):
            MatrixModule.trivial(3).sigma_matrix(3)

    def test_mismatched_module(self, zn3):
        with pytest.raises(ValueError):
            zn_character(H1Module(4), zn3)

    def test_protocol(self):
        assert isinstance(H1Module(3), Representation)
        assert isinstance(MatrixModule.trivial(2), Representation)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_abelianization(self, n):
        assert zn_abelianization(n) == [4]

    def test_abelianization_bound(self):
        with pytest.raises(BoundExceeded):
            zn_abelianization(5)
