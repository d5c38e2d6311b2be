"""Unit tests for closed formulas, Betti tables and the Albanese comparison"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest

from level4_braids.formulas import *
from level4_braids.homology import dim_h1


class TestClosedForms:
    """Test the closed formulas in g and n"""
    @pytest.mark.parametrize(("g", "euler"), [(1, -4), (2, -3072), (3, -125829120)])
    def test_smod_euler(self, g, euler):
        assert smod_euler(g) == euler

    @pytest.mark.parametrize("g", range(1, 21))
    def test_euler_formula(self, g):
        assert smod_euler(g) == -(2 ** (comb(2 * g + 1, 2) - 1)) * factorial(2 * g - 1)

    @pytest.mark.parametrize(("g", "b1"), [(1, 5), (2, 54), (3, 230)])
    def test_smod_b1(self, g, b1):
        assert smod_b1(g) == b1

    @pytest.mark.parametrize(("g", "dim"), [(1, 0), (2, 14), (3, 90)])
    def test_v2lambda2(self, g, dim):
        assert v2lambda2_dimension(g) == dim

    @pytest.mark.parametrize("g", range(1, 21))
    def test_quartic_matches_bound(self, g):
        report = closed_forms(g)
        assert report["quartic_matches_bound"]
        assert report["torelli_bound"] == smod_b1(g) + v2lambda2_dimension(g)
        assert report["braid_torelli_bound"] == report["torelli_bound"] + 1
        assert report["quartic_no_constant"] == report["quartic_minus6"] + 1

    def test_known_values(self):
        assert closed_forms(2)["euler_smod"] == -3072
        assert closed_forms(3)["torelli_bound"] == 320
        assert torelli_quartic(2) == 68
        assert torelli_quartic(1, 0) == Fraction(6)

    def test_strand_values(self):
        report = closed_forms(n=5)
        assert report.to_dict() == {
            "n": 5, "dim_h1": 55, "cd": 4, "euler": 0, "index_in_pure": 1024,
            "euler_pmod_level4": -3072, "cd_pmod_level4": 3,
        }
        assert set(closed_forms(n=1).values) == {"dim_h1", "cd", "euler"}

    def test_pmod(self):
        assert pmod_euler(3) == 1
        assert pmod_euler(5) == 2
        assert pmod_level4_index(4) == 4
        assert level4_pmod_euler(4) == -4
        with pytest.raises(ValueError):
            pmod_euler(2)

    def test_invalid(self):
        with pytest.raises(ValueError):
            closed_forms()
        with pytest.raises(ValueError):
            closed_forms(2, n=3)
        with pytest.raises(ValueError):
            closed_forms(0)
        with pytest.raises(TypeError):
            smod_b1(True)


class TestBetti:
    """Test Betti numbers of small level-4 groups"""
    def test_tables(self):
        assert level4_betti(2) == (1, 1)
        assert level4_betti(3) == (1, 6, 5)
        assert level4_betti(4) == (1, 21, 103, 83)
        assert pmod_level4_betti(4) == (1, 20, 83)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_euler_characteristic(self, n):
        assert BettiTable("B", level4_betti(n)).euler == 0
        assert BettiTable("P", pmod_level4_betti(n)).euler == level4_pmod_euler(n + 1)
        assert level4_betti(n)[1] == dim_h1(n)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            pmod_level4_betti(5)

    def test_genus_two(self):
        bound = genus2_top_bound()
        assert bound == {"euler": -3072, "b1": 54, "b3_minus_b2": 3019, "b2_min": 49, "b3_min": 3068}
        tables = betti_tables()
        assert tables["Mod_2[4]"]["b3_min"] == 3068
        assert tables["B_3[4]"].to_dict() == {"group": "B_3[4]", "betti": [1, 6, 5], "euler": 0}


class TestAlbanese:
    """Test the exact Albanese comparison"""
    def test_genus_seven(self):
        w = albanese_inequality(7)
        assert (w.holds, w.lhs_digits, w.rhs_digits) == (True, 41, 39)
        assert w.in_range

    def test_small_genus_fails(self):
        w = albanese_inequality(2)
        assert w.lhs == 3018
        assert w.rhs == comb(54, 3)
        assert not w.holds
        assert not w.in_range

    def test_range(self):
        witnesses = albanese_range(7, 20)
        assert [w.g for w in witnesses] == list(range(7, 21))
        assert all(w.holds for w in witnesses)

    def test_invalid(self):
        with pytest.raises(ValueError):
            albanese_inequality(1)
