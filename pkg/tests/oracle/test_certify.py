"""Unit tests for the presentation oracle and its checks of the rewriting engine"""

from __future__ import annotations

from fractions import Fraction

import pytest

from level4_braids.braids import PureBraidWord, conjugate
from level4_braids.config import Limits
from level4_braids.errors import BoundExceeded, NotInSubgroup
from level4_braids.homology import BasisSymbol, H1Vector, ModuleExpression
from level4_braids.oracle import *
from level4_braids.utils import rank


class TestWords:
    """Test the words standing for basis symbols and expressions"""
    def test_symbol_word(self):
        assert str(symbol_word(BasisSymbol.tau(1, 2), 3)) == "A(1,2)^2"
        assert str(symbol_word(BasisSymbol.s2(1, 2, 3, 0), 3)) == "A(1,3) A(1,2)^2 A(1,3)^-1"

    def test_expression_words(self):
        words = expression_words(ModuleExpression.parse("(1-T(1,3))*t(1,2)", 3))
        assert [c for c, _ in words] == [1, -1]
        assert len(expression_words(H1Vector.parse("t(1,2) + t(1,3)", 3))) == 2

    def test_random_expression(self, rng):
        e = random_expression(4, rng, terms=5)
        assert e.n == 4
        assert len(e.terms) <= 5


class TestOracle:
    """Test H_1 of the level-4 subgroup on three strands"""
    def test_rank(self, oracle3):
        assert oracle3.rank == 6
        assert oracle3.result.odd_torsion is False
        assert oracle3.to_dict()["rank"] == 6

    def test_word_class(self, oracle3):
        sq = PureBraidWord.generator(1, 2, 3, 2)
        assert any(oracle3.word_class(sq))
        assert not any(oracle3.word_class(PureBraidWord(3)))
        with pytest.raises(NotInSubgroup):
            oracle3.word_class(PureBraidWord.generator(1, 2, 3))

    def test_classes_are_additive(self, oracle3):
        a = PureBraidWord.generator(1, 2, 3, 2)
        b = PureBraidWord.generator(2, 3, 3, 2)
        both = tuple(x + y for x, y in zip(oracle3.word_class(a), oracle3.word_class(b)))
        assert oracle3.word_class(a * b) == both

    def test_basis_isomorphism(self, oracle3):
        phi = basis_isomorphism(3, oracle=oracle3)
        assert phi.shape == (6, 6)
        assert rank(phi) == 6

    def test_image_of_basis(self, oracle3):
        sym = BasisSymbol.s2(1, 2, 3, 1)
        v = H1Vector.from_symbol(sym, 3, Fraction(1, 2))
        expected = tuple(Fraction(1, 2) * x for x in oracle3.symbol_classes()[sym])
        assert oracle3.image(v) == expected

    def test_relation_check(self, oracle3):
        g = PureBraidWord.parse("A(1,3) A(2,3)", 3)
        sq = PureBraidWord.generator(1, 2, 3, 2)
        assert relation_check(conjugate(g, sq), sq, oracle=oracle3)
        assert not relation_check(sq, PureBraidWord.generator(1, 3, 3, 2), oracle=oracle3)
        with pytest.raises(ValueError):
            relation_check(sq, PureBraidWord.generator(1, 2, 4, 2), oracle=oracle3)

    def test_relation_check_combinations(self, oracle3):
        sq = PureBraidWord.generator(1, 2, 3, 2)
        assert relation_check([(2, sq)], sq * sq, oracle=oracle3)
        assert relation_check(ModuleExpression.parse("2*t(1,2)", 3), [(2, sq)], oracle=oracle3)

    def test_reduce_certificate(self, oracle3):
        report = reduce_certificate(3, count=200, seed=0, oracle=oracle3)
        assert report.passed, report.failures
        assert report.isomorphism
        assert report.to_dict()["checked"] == 200

    def test_identities(self, oracle3):
        assert identity_failures(3, oracle=oracle3) == []

    def test_jacobi_and_witt_hall(self, oracle3):
        assert jacobi_failures(3, count=10, oracle=oracle3) == []
        assert witt_hall_failures(3, count=10, oracle=oracle3) == []

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            OracleH1(5)
        with pytest.raises(BoundExceeded):
            OracleH1(4, limits=Limits(oracle=3))


@pytest.mark.slow
class TestOracleFour:
    """Test the oracle on four strands"""
    def test_rank(self, oracle4):
        assert oracle4.rank == 21
        assert oracle4.result.odd_torsion is False

    def test_reduce_certificate(self, oracle4):
        report = reduce_certificate(4, count=200, seed=0, oracle=oracle4)
        assert report.passed, report.failures
        assert report.checked == 200

    def test_identities(self, oracle4):
        assert identity_failures(4, oracle=oracle4) == []
