"""Unit tests for cover labels, the detection maps and the independence certificate"""

from __future__ import annotations

from itertools import combinations

import pytest

from level4_braids.braids import PureBraidWord
from level4_braids.covers import *
from level4_braids.errors import CaseMismatch, ParseError
from level4_braids.homology import (
    Generator,
    H1Vector,
    ModuleExpression,
    act,
    commutator_class,
    enumerate_basis,
    reduce,
    tau_boundary,
)
from level4_braids.utils import all_pairs


class TestLabels:
    """Test labels, cover indices and pair vectors"""
    def test_label(self):
        assert label("2'") == Label(True, 2)
        assert label(3) == Label(False, 3)
        assert Label(False, 9) < Label(True, 1)
        with pytest.raises(ParseError):
            label("x")
        with pytest.raises(TypeError):
            label(True)

    def test_cover_parse(self):
        assert CoverIndex.parse("(2,inf)", 3) == CoverIndex(3, 2)
        assert CoverIndex.parse("(3,1)", 3) == CoverIndex(3, 1, 3)
        assert str(CoverIndex(4, 2, 4)) == "(2,4)"
        with pytest.raises(ParseError):
            CoverIndex.parse("x", 3)
        with pytest.raises(ValueError):
            CoverIndex(3, 2, 2)

    def test_all_covers(self):
        assert len(all_covers(3)) == 6
        covers = all_covers(4)
        assert len(covers) == 10
        assert sum(c.is_infinite for c in covers) == 4

    def test_cover_labels(self):
        cover = CoverIndex(3, 1)
        assert [str(x) for x in cover.labels] == ["1", "2", "3", "2'", "3'"]
        assert len(PairVector.zero(3, cover).coordinates()) == 10

    def test_pair_vector(self):
        cover = CoverIndex(3, 1)
        v = PairVector(3, cover, {(3, 2): 1, ("2'", "3'"): 2})
        assert v[(2, 3)] == 1
        assert str(v - v) == "0"
        assert str(v) == "(23) + 2(2'3')"
        with pytest.raises(ValueError):
            PairVector(3, cover, {(1, "1'"): 1})
        with pytest.raises(ValueError):
            v + PairVector.zero(3, CoverIndex(3, 2))

    def test_subset_symbol(self):
        assert str(subset_symbol([1, 2, 3], n=3)) == "(12) + (13) + (23)"
        assert not subset_symbol([1], n=3)

    def test_delta(self):
        d = delta(2, 3, 3, CoverIndex(3, 1))
        assert d[(2, "3'")] == -1
        assert d[("2'", "3'")] == 1


class TestPsi:
    """Test the detection maps"""
    def test_psi_base(self):
        v = H1Vector.parse("t(1,2) + T(1,3)*t(1,2)", 3)
        assert str(psi_base(v)) == "4(12)"
        assert str(psi_base(PureBraidWord.generator(1, 2, 3, 2))) == "2(12)"
        with pytest.raises(TypeError):
            psi_base("t(1,2)")

    def test_psi_square_cases(self):
        assert str(psi_square(CoverIndex(3, 1), 2, 3)) == "2(23) + 2(2'3')"
        assert str(psi_square(CoverIndex(4, 1, 3), 2, 4)) == "2(24') + 2(42')"
        assert str(psi_square(CoverIndex(3, 1, 2), 1, 2)) == "2(12) + 2(13') + 2(23')"
        assert str(psi_square(CoverIndex(3, 1), 1, 2)) == "(12) + (12') + (22')"

    def test_psi_cover_naturality(self):
        v = H1Vector.parse("T(1,2)*t(2,3)", n=3)
        assert str(psi_cover(CoverIndex(3, 1), v)) == "2(23') + 2(32')"

    @pytest.mark.parametrize("n", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
    def test_naturality_on_every_symbol(self, n):
        for sym in enumerate_basis(n):
            v = H1Vector.from_symbol(sym, n)
            for p in all_pairs(n):
                moved = act(Generator.twist(*p), v)
                for cover in all_covers(n):
                    expected = psi_cover(cover, v).permute(iota(cover, *p))
                    assert psi_cover(cover, moved) == expected, (sym, p, cover)

    def test_difference_examples(self):
        v = reduce(ModuleExpression.parse("(1-T(1,3))*t(1,2)", 3))
        assert psi_cover(CoverIndex(3, 3), v) == delta(1, 2, 3, CoverIndex(3, 3)).scale(2)
        assert not psi_base(v)
        cover = CoverIndex(4, 1, 2)
        w = reduce(ModuleExpression.parse("(1-T(1,4))(1-T(2,3))*t(1,2)", 4))
        assert psi_cover(cover, w) == delta(3, 4, 4, cover).scale(4)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_commutators_vanish(self, n):
        for i, j, k in combinations(range(1, n + 1), 3):
            v = commutator_class(i, j, k, n)
            assert v
            assert not psi_base(v)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_boundary_class(self, n):
        assert psi_base(tau_boundary(n)) == subset_symbol(range(1, n + 1), n).scale(2)
        if n == 3:
            assert str(psi_base(tau_boundary(3))) == "2(12) + 2(13) + 2(23)"

    def test_iota(self):
        assert iota(CoverIndex(3, 1), 1, 2) == {Label(False, 2): Label(True, 2), Label(True, 2): Label(False, 2)}
        assert iota(CoverIndex(3, 1), 2, 3) == {}

    @pytest.mark.parametrize("n", [3, 4])
    def test_general_curve_matches_squares(self, n):
        for cover in all_covers(n):
            for k, l in combinations(range(1, n + 1), 2):
                A, split = artin_curve(cover, k, l)
                assert psi_general_curve(cover, A, split) == psi_square(cover, k, l)

    def test_general_curve_case_mismatch(self):
        cover = CoverIndex(3, 1)
        with pytest.raises(CaseMismatch):
            psi_general_curve(cover, [1, 2], ({2}, set()))
        with pytest.raises(CaseMismatch):
            psi_general_curve(cover, [2, 3])
        with pytest.raises(CaseMismatch):
            psi_general_curve(cover, [2, 3], ({2}, {2, 3}))

    def test_psi_word(self):
        base = psi_word(None, [ConjugatedSquare(PureBraidWord(3), (1, 2))])
        assert base == psi_base(H1Vector.parse("t(1,2)", 3))
        cover = CoverIndex(3, 1)
        f = ConjugatedSquare(PureBraidWord.generator(1, 2, 3), (2, 3))
        assert psi_word(cover, [f]) == psi_cover(cover, H1Vector.parse("T(1,2)*t(2,3)", 3))
        with pytest.raises(ValueError):
            psi_word(cover, [])


class TestCertificate:
    """Test independence of the basis"""
    @pytest.mark.parametrize(("n", "dim"), [(2, 1), (3, 6), (4, 21)])
    def test_independent(self, n, dim):
        report = independence_certificate(n)
        assert report.rank == report.dimension == dim
        assert report.independent

    @pytest.mark.slow
    def test_independent_five(self):
        assert independence_certificate(5).rank == 55

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            independence_certificate(1)

    def test_detection_table(self):
        table = detection_table(3)
        assert len(table) == 3 * len(all_covers(3))
        assert set(table[0].to_dict()) == {"element", "cover", "image"}
        rows: dict[str, dict[CoverIndex, PairVector]] = {}
        for entry in table:
            rows.setdefault(str(entry.element), {})[entry.cover] = entry.image
        expected = [
            (CoverIndex(3, 3), delta(1, 2, 3, CoverIndex(3, 3)).scale(2)),
            (CoverIndex(3, 2), delta(1, 3, 3, CoverIndex(3, 2)).scale(-2)),
            (CoverIndex(3, 1), delta(2, 3, 3, CoverIndex(3, 1)).scale(2)),
        ]
        assert len(rows) == len(expected)
        for images, (cover, image) in zip(rows.values(), expected):
            infinite = {c: v for c, v in images.items() if c.is_infinite}
            assert len(infinite) == 3
            assert [c for c, v in infinite.items() if v] == [cover]
            assert infinite[cover] == image
        with pytest.raises(ValueError):
            detection_table(2)
