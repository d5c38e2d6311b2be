"""Unit tests for presentations, coset tables and abelianization"""

from __future__ import annotations

import pytest

from level4_braids.braids import PureBraidWord
from level4_braids.errors import BoundExceeded, NotInSubgroup, ParseError
from level4_braids.oracle import *


class TestPresentation:
    """Test the presentation container and its text form"""
    def test_parse(self):
        p = Presentation.parse("gen a\ngen b\n# comment\n\nrel a b A B")
        assert p.generators == ("a", "b")
        assert p.relators == ((1, 2, -1, -2),)
        assert Presentation.parse(p.format()) == p

    def test_write_and_read(self, tmp_path):
        p = pb_presentation(3)
        path = p.write(tmp_path / "pb3.txt")
        assert Presentation.read(path) == p

    def test_free_reduction(self):
        assert free_reduce((1, 2, -2, -1, 3)) == (3,)
        assert Presentation(["a"], [[1, -1]]).relators == ()

    @pytest.mark.parametrize("text", ["foo a", "gen a\nrel b", "gen a\ngen a"])
    def test_parse_rejects(self, text):
        with pytest.raises(ParseError):
            Presentation.parse(text)

    def test_invalid(self):
        with pytest.raises(ValueError):
            Presentation(["A"])
        with pytest.raises(ValueError):
            Presentation(["a"], [[2]])
        with pytest.raises(TypeError):
            Presentation([1])

    def test_exponent_rows(self):
        p = Presentation.parse("gen a\ngen b\nrel a a b B b")
        assert p.exponent_rows() == [{0: 2, 1: 1}]


class TestPurePresentation:
    """Test the standard presentation of PB_n"""
    @pytest.mark.parametrize(("n", "count"), [(2, 0), (3, 2), (4, 11), (5, 35)])
    def test_relator_counts(self, n, count):
        p = pb_presentation(n)
        assert len(p.relators) == count
        assert len(p.generators) == n * (n - 1) // 2

    def test_names(self):
        assert pb_presentation(3).generators == ("a12", "a13", "a23")

    @pytest.mark.parametrize("n", [3, 4])
    def test_relators_hold_under_burau(self, n):
        assert relator_failures(pb_presentation(n), n) == []

    def test_relator_word(self):
        p = pb_presentation(3)
        assert isinstance(relator_word(p.relators[0], 3), PureBraidWord)

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            pb_presentation(6)


class TestAbelianization:
    """Test abelianization of small presentations"""
    def test_two_torsion(self):
        result = abelianization(Presentation.parse("gen a\ngen b\nrel a a b b"))
        assert result.free_rank == 1
        assert result.divisors == (2,)
        assert result.odd_torsion is False

    def test_odd_torsion(self):
        result = abelianization(Presentation.parse("gen a\nrel a a a a a a"))
        assert result.free_rank == 0
        assert result.divisors == (6,)
        assert result.odd_torsion is True

    def test_without_smith(self):
        result = abelianization(Presentation.parse("gen a\ngen b\nrel a b"), smith=False)
        assert result.divisors is None
        assert result.odd_torsion is None
        assert result.free_rank == 1

    def test_free_group(self):
        result = abelianization(Presentation(["a", "b"]))
        assert result.free_rank == 2
        assert result.coordinates({0: 3, 1: -1}) == (3, -1)

    def test_functionals_kill_relators(self):
        p = Presentation.parse("gen a\ngen b\ngen c\nrel a b b\nrel c c")
        result = abelianization(p)
        assert result.free_rank == 1
        for row in p.exponent_rows():
            assert all(v == 0 for v in result.coordinates(row))

    def test_eliminate_units(self):
        units, rest = eliminate_units([{0: 1, 1: 2}, {1: 2}])
        assert units == 1
        assert rest == [{1: 2}]


class TestSchreier:
    """Test the coset table and Reidemeister-Schreier rewriting"""
    def test_coset_table(self):
        table = CosetTable(3)
        assert table.index == 8
        assert table.transversal(5) == (1, 3)
        assert table.trace((1, 2, 1)) == 2
        assert table.is_tree_edge(0, 2)
        assert not table.is_tree_edge(3, 1)
        with pytest.raises(ValueError):
            CosetTable(-1)
        with pytest.raises(TypeError):
            CosetTable(True)

    def test_generator_counts(self):
        sub = subgroup_presentation(3)
        assert len(sub.presentation.generators) == 17
        assert sub.to_dict()["index"] == 8

    @pytest.mark.slow
    def test_generator_counts_four(self):
        assert len(subgroup_presentation(4).presentation.generators) == 321

    def test_rewrite(self):
        sub = subgroup_presentation(3)
        assert sub.rewrite(PureBraidWord.generator(1, 2, 3, 2))
        assert sub.rewrite(PureBraidWord(3)) == ()
        with pytest.raises(NotInSubgroup):
            sub.rewrite(PureBraidWord.generator(1, 2, 3))
        with pytest.raises(ValueError):
            sub.rewrite(PureBraidWord.generator(1, 2, 4, 2))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            subgroup_presentation(5)
