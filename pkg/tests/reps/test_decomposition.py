"""Unit tests for isotypic splitting, multiplicities, seeds and torsion points"""

from __future__ import annotations

import pytest

from level4_braids.braids import I3, I4, BraidWord, PairSubset, enumerate_zn
from level4_braids.errors import NonInvolutive, NotOnCentralComponent
from level4_braids.homology import dim_h1
from level4_braids.reps import *
from level4_braids.utils import dense_matrix


class TestIrrepLabel:
    """Test labels of the irreducibles"""
    def test_str_and_dims(self):
        assert str(IrrepLabel.rho3()) == "V(rho3,(0))"
        assert str(IrrepLabel.trivial((2,))) == "V(1,(2))"
        assert [constituent_dimension(x, 4) for x in five_constituents(4)] == [1, 3, 2, 12, 3]
        assert [constituent_dimension(x, 3) for x in five_constituents(3)] == [1, 2, 3]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_dims_sum_to_h1(self, n):
        assert sum(constituent_dimension(x, n) for x in five_constituents(n)) == dim_h1(n)

    def test_invalid(self):
        with pytest.raises(ValueError):
            IrrepLabel(3, I4(4), "rho3")
        with pytest.raises(ValueError):
            IrrepLabel(3, I3(3), "rho4")
        assert not IrrepLabel.trivial((2,)).is_valid_for(3)
        assert IrrepLabel.trivial((2,)).is_valid_for(4)

    def test_constituent_value(self):
        assert constituent_value(IrrepLabel.trivial(), BraidWord(3)) == 1
        assert constituent_value(IrrepLabel.trivial((1,)), BraidWord.sigma(1, 3)) == 0

    def test_branching(self):
        rows = [(str(J), k) for J, k in branching(IrrepLabel.rho4(), 4)]
        assert sorted(rows) == [("{12,13,24,34}", 1), ("{12,14,23,34}", 1), ("{13,14,23,24}", 1)]

    def test_restriction_matches_isotypic(self, isotypic4):
        assert pure_restriction(five_constituents(4), 4) == isotypic4.dims()


class TestIsotypic:
    """Test the split into PZ_n-isotypic components"""
    def test_small(self):
        report = isotypic_decomposition(H1Module(3))
        assert report.multiplicity(PairSubset(3)) == 3
        assert report.multiplicity(I3(3)) == 1
        assert sum(report.dims().values()) == 6

    def test_four_strands(self, isotypic4):
        assert isotypic4.dimension == 21
        assert sum(isotypic4.dims().values()) == 21
        assert len(isotypic4.subsets()) == 16
        assert isotypic4.multiplicity(PairSubset(4)) == 6
        assert isotypic4.multiplicity(I4(4)) == 1
        assert isotypic4.multiplicity(PairSubset(4, [(1, 2)])) == 0

    def test_component_agrees(self, isotypic4):
        assert isotypic_component(H1Module(4), I3(4)).shape[1] == isotypic4.multiplicity(I3(4))

    def test_explicit_matrices(self):
        report = isotypic_decomposition({(1, 2): dense_matrix([[1, 0], [0, -1]])}, n=2)
        assert report.dims() == {PairSubset(2): 1, PairSubset(2, [(1, 2)]): 1}
        with pytest.raises(NonInvolutive):
            isotypic_decomposition({(1, 2): dense_matrix([[2]])}, n=2)
        with pytest.raises(ValueError):
            isotypic_decomposition({}, n=2)


class TestMultiplicity:
    """Test multiplicities of the five constituents"""
    @pytest.mark.parametrize("n", [3, 4])
    def test_multiplicity_one(self, n):
        assert [row.multiplicity for row in decomposition(n)] == [1] * len(five_constituents(n))

    def test_absent_label(self):
        assert multiplicity(IrrepLabel.trivial((1, 1)), n=4) == 0

    @pytest.mark.parametrize("n", [3, pytest.param(4, marks=pytest.mark.slow)])
    def test_full_agrees(self, n, limits):
        for row in decomposition(n, limits=limits):
            assert multiplicity_full(row.label, n=n, limits=limits) == row.multiplicity == 1

    @pytest.mark.parametrize("n", [3, pytest.param(4, marks=pytest.mark.slow)])
    def test_constituents_orthonormal(self, n, limits):
        table = enumerate_zn(n, limits=limits)
        classes = conjugacy_classes(table)
        labels = five_constituents(n)
        chars = [induced_character(x, n, table=table, classes=classes) for x in labels]
        gram = [[a.inner_product(b) for b in chars] for a in chars]
        assert gram == [[int(i == j) for j in range(len(labels))] for i in range(len(labels))]

    def test_induced_inner_product(self):
        assert induced_inner_product(IrrepLabel.rho3(), IrrepLabel.rho3(), 3) == 1
        assert induced_inner_product(IrrepLabel.trivial(), IrrepLabel.rho3(), 3) == 0

    def test_trivial_module(self):
        assert multiplicity(IrrepLabel.trivial(), MatrixModule.trivial(3)) == 1
        assert multiplicity(IrrepLabel.rho3(), MatrixModule.trivial(3)) == 0

    def test_needs_module_or_n(self):
        with pytest.raises(ValueError):
            multiplicity(IrrepLabel.rho3())

    @pytest.mark.slow
    def test_five_strands(self):
        rows = decomposition(5)
        assert [row.multiplicity for row in rows] == [1] * 5
        assert [row.dim for row in rows] == [1, 4, 5, 30, 15]


class TestSeeds:
    """Test the submodules generated by α, x_3 and x_4"""
    @pytest.mark.parametrize(("n", "dim"), [(3, 3), (4, 6)])
    def test_alpha(self, n, dim):
        assert orbit_submodule(alpha_seed(n)).dimension == dim

    @pytest.mark.parametrize(("seed", "n", "dim"), [(x3_seed, 3, 3), (x3_seed, 4, 12), (x4_seed, 4, 3)])
    def test_x_seeds(self, seed, n, dim):
        assert orbit_submodule(seed(n)).dimension == dim

    def test_seed_arguments(self):
        with pytest.raises(ValueError):
            x4_seed(3)
        with pytest.raises(ValueError):
            orbit_submodule([])

    @pytest.mark.parametrize(("k", "n"), [(3, 3), (3, 4), (4, 4)])
    def test_seed_characters(self, k, n):
        assert seed_character_failures(k, n) == []


class TestTorsion:
    """Test 2-torsion points and their components"""
    @pytest.mark.parametrize(("n", "count"), [(2, 0), (3, 3), (4, 15)])
    def test_counts(self, n, count):
        assert len(torsion_points(n)) == count

    @pytest.mark.slow
    def test_five_strands(self, isotypic5):
        points = torsion_points(5, report=isotypic5)
        assert len(points) == 45
        assert torsion_points(5, 2, report=isotypic5) == []
        for I in points:
            component = cohen_suciu_membership(I)
            assert component.kind in (ComponentKind.TRIPLE, ComponentKind.QUADRUPLE)
            assert on_component(torsion_coordinates(I), component)

    @pytest.mark.parametrize("n", [3, 4])
    def test_points_satisfy_component_equations(self, n, request):
        report = request.getfixturevalue("isotypic4") if n == 4 else isotypic_decomposition(H1Module(3))
        points = torsion_points(n, report=report)
        assert torsion_points(n, 2, report=report) == []
        for I in points:
            t = torsion_coordinates(I)
            component = cohen_suciu_membership(I)
            assert on_component(t, component)
            strands = set(component.strands)
            assert all(set(p) <= strands for p in I.pairs)
            if component.kind is ComponentKind.TRIPLE:
                i, j, k = component.strands
                assert t[(i, j)] * t[(i, k)] * t[(j, k)] == 1
            else:
                i, j, k, l = component.strands
                assert (t[(i, j)], t[(i, k)], t[(i, l)]) == (t[(k, l)], t[(j, l)], t[(j, k)])

    def test_depth_two(self, isotypic4):
        assert torsion_points(4, 2, report=isotypic4) == []
        with pytest.raises(ValueError):
            torsion_points(4, 0)

    def test_report(self, isotypic4):
        points = torsion_report(4, report=isotypic4)
        assert all(p.dimension == 1 for p in points)
        kinds = {p.component.kind for p in points}
        assert kinds == {ComponentKind.TRIPLE, ComponentKind.QUADRUPLE}
        assert set(points[0].to_dict()) == {"I", "dim", "component"}

    def test_membership(self):
        assert str(cohen_suciu_membership(I3(4))) == "V(1,2,3)"
        assert str(cohen_suciu_membership(I4(4))) == "V(1,2,3,4)"
        assert str(cohen_suciu_membership(PairSubset(3))) == "1"
        with pytest.raises(NotOnCentralComponent):
            cohen_suciu_membership(PairSubset(3, [(1, 2)]))

    def test_coordinates(self):
        t = torsion_coordinates(I3(3))
        assert t == {(1, 2): 1, (1, 3): -1, (2, 3): -1}
        assert on_component(t, Component(ComponentKind.TRIPLE, (1, 2, 3)))

    def test_twisted_dimension(self, isotypic4):
        assert twisted_h1_dimension(4, I3(4), isotypic4) == 1
        with pytest.raises(ValueError):
            twisted_h1_dimension(3, I3(4))
