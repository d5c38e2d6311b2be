"""Unit tests for the braid group action, forgetful maps and orbit spans"""

from __future__ import annotations

import numpy as np
import pytest

from level4_braids.braids import BraidWord, PureBraidWord, random_level4_word
from level4_braids.errors import ParseError
from level4_braids.homology import *
from level4_braids.utils import column, fraction_rows
from tests.utils import assert_identity, assert_same_matrix, assert_vector


class TestGenerator:
    """Test generator parsing"""
    @pytest.mark.parametrize(("text", "expected"), [
        ("s1", Generator.sigma(1)),
        ("S2", Generator.sigma(2, -1)),
        ("T(1,3)", Generator.twist(1, 3)),
        ("A(3,1)", Generator.twist(1, 3)),
    ])
    def test_parse(self, text, expected):
        assert Generator.parse(text) == expected

    def test_parse_rejects(self):
        with pytest.raises(ParseError):
            Generator.parse("x1")

    def test_invalid(self):
        with pytest.raises(ValueError):
            Generator.sigma(0)
        with pytest.raises(ValueError):
            Generator(GeneratorKind.TWIST, pair=(2, 2))

    def test_as_generators_drops_even_powers(self):
        w = PureBraidWord.parse("A(1,2)^2 A(1,3)", 3)
        assert as_generators(w) == [Generator.twist(1, 3)]


class TestAct:
    """Test the action on vectors and matrices"""
    def test_twist_on_tau(self):
        v = H1Vector.from_symbol(BasisSymbol.tau(1, 2), n=3)
        assert str(act("T(1,3)", v)) == "T(1,3)*t(1,2)"
        assert act("T(1,3)", act("T(1,3)", v)) == v

    def test_half_twist_square_is_twist(self):
        assert_same_matrix(word_matrix("s1 s1", 3), generator_matrix("T(1,2)", 3))

    def test_inverse_letters(self):
        assert_identity(word_matrix("s1 S1", 3))
        assert_identity(word_matrix("s1 s2 s1 S2 S1 S2", 3))

    @pytest.mark.parametrize("n", [
        3, 4, pytest.param(5, marks=pytest.mark.slow), pytest.param(6, marks=pytest.mark.slow),
    ])
    def test_braid_relations(self, n):
        s = [generator_matrix(Generator.sigma(k), n) for k in range(1, n)]
        for k in range(n - 2):
            assert_same_matrix(s[k].matmul(s[k + 1]).matmul(s[k]), s[k + 1].matmul(s[k]).matmul(s[k + 1]))
        for i in range(n - 1):
            for j in range(i + 2, n - 1):
                assert_same_matrix(s[i].matmul(s[j]), s[j].matmul(s[i]))
            assert_identity(s[i].matmul(generator_matrix(Generator.sigma(i + 1, -1), n)))

    @pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
    def test_level4_acts_trivially(self, n):
        rng = np.random.default_rng(n)
        for _ in range(200):
            w = random_level4_word(n, rng)
            assert_identity(word_matrix(w, n))
        assert_identity(word_matrix(PureBraidWord.generator(1, n, n, 2)))

    def test_act_agrees_with_matrix(self):
        v = H1Vector.parse("t(1,2) - 1/2*T(2,3)*t(1,3)", 3)
        w = BraidWord.parse("s1 S2 s2 s2", 3)
        expected = [[c] for c in act(w, v).to_column()]
        assert fraction_rows(word_matrix(w).matmul(column(v.to_column()))) == expected

    def test_pure_word_acts_by_twists(self):
        v = H1Vector.parse("t(2,3)", 3)
        w = PureBraidWord.generator(1, 2, 3)
        assert act(w, v) == act(w.to_braid_word(), v)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            act("s3", H1Vector.parse("t(1,2)", 3))
        with pytest.raises(ValueError):
            word_matrix("s1")

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_boundary_class_is_invariant(self, n):
        v = tau_boundary(n)
        assert v
        for k in range(1, n):
            assert act(Generator.sigma(k), v) == v


class TestFunctorial:
    """Test forgetful maps, stabilization and orbit spans"""
    def test_forgetful(self):
        v = H1Vector.parse("T(1,3)*t(1,2)", n=3)
        assert_vector(forgetful(v, [1, 2]), {"t(1,2)": 1})
        assert not forgetful(H1Vector.parse("t(1,3)", 3), [1, 2])

    def test_forgetful_relabels(self):
        v = H1Vector.parse("T(2,4)*t(2,3)", n=4)
        assert_vector(forgetful(v, [2, 3, 4]), {"T(1,3)*t(1,2)": 1})

    def test_forgetful_rejects(self):
        v = H1Vector.parse("t(1,2)", 3)
        with pytest.raises(ValueError):
            forgetful(v, [1])
        with pytest.raises(ValueError):
            forgetful(v, [1, 5])

    def test_forgetful_matrix_shape(self):
        assert forgetful_matrix(4, [1, 2, 3]).shape == (6, 21)

    def test_stabilization(self):
        v = stabilization_map(H1Vector.parse("T(1,3)*t(1,2)", 3))
        assert v.n == 4
        assert_vector(forgetful(v, [1, 2, 3]), {"T(1,3)*t(1,2)": 1})

    def test_orbit_span_rank(self):
        images = [stabilization_map(H1Vector.from_symbol(s, 3)) for s in enumerate_basis(3)]
        assert orbit_span_rank(images, 4) == 21
        assert orbit_span_rank([], 4) == 0

    def test_orbit_of_tau(self):
        assert orbit_span_rank([H1Vector.parse("t(1,2)", 3)], 3) == 6
