"""Unit tests for serialization, exact matrices and small helpers"""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from level4_braids.utils import *


class _Report:
    def to_dict(self):
        return {"value": Fraction(3, 2)}


class TestRationals:
    """Test rational text forms"""
    @pytest.mark.parametrize(("x", "text"), [(Fraction(3, 6), "1/2"), (4, "4"), (Fraction(-4, 2), "-2")])
    def test_format(self, x, text):
        assert format_rational(x) == text

    def test_parse(self):
        assert parse_rational(" 3/4 ") == Fraction(3, 4)
        assert parse_rational("-2") == -2
        for bad in ("1/0", "abc"):
            with pytest.raises(ValueError):
                parse_rational(bad)


class TestReports:
    """Test JSON and CSV output"""
    def test_to_jsonable(self):
        data = {1: Fraction(1, 2), "b": [10 ** 20, 12, True, None], "c": (1, 2), "r": _Report()}
        assert to_jsonable(data) == {
            "1": "1/2",
            "b": ["100000000000000000000", 12, True, None],
            "c": [1, 2],
            "r": {"value": "3/2"},
        }

    def test_dumps_json(self):
        assert json.loads(dumps_json({"b": 1, "a": Fraction(1, 3)})) == {"a": "1/3", "b": 1}

    def test_dumps_csv(self):
        assert dumps_csv([{"a": 1, "b": [1, 2]}]) == 'a,b\n1,"[1, 2]"\n'
        assert dumps_csv({"x": 1}) == "x\n1\n"
        assert dumps_csv([1, 2]) == "value\n1\n2\n"
        assert dumps_csv({"n": 3, "rows": [{"k": 0}, {"k": 1}]}) == "k\n0\n1\n"

    def test_write_report(self, tmp_path, capsys):
        path = tmp_path / "sub" / "report.json"
        text = write_report({"x": 1}, path)
        assert path.read_text() == text
        assert json.loads(text) == {"x": 1}
        write_report([{"x": 1}], fmt="csv")
        assert capsys.readouterr().out == "x\n1\n"
        with pytest.raises(ValueError):
            write_report({}, fmt="xml")


class TestLinalg:
    """Test exact matrix helpers"""
    def test_entries_and_rows(self):
        m = dense_matrix([[1, Fraction(1, 2)], [0, 3]])
        assert fraction_rows(m) == [[1, Fraction(1, 2)], [0, 3]]
        assert matrix_entries(m) == {0: {0: 1, 1: Fraction(1, 2)}, 1: {1: 3}}
        assert trace(m) == 4

    def test_rank_and_identity(self):
        assert rank(dense_matrix([[1, 2], [2, 4]])) == 1
        assert rank(sparse_matrix({}, (0, 3))) == 0
        assert is_identity(identity_matrix(3))
        assert not is_identity(dense_matrix([[1, 1], [0, 1]]))

    def test_column_basis(self):
        m = dense_matrix([[1, 2, 0], [0, 0, 1]])
        assert column_basis(m).shape == (2, 2)

    def test_solve_in_basis(self):
        basis = dense_matrix([[1, 0], [0, 1], [1, 1]])
        coords = solve_in_basis(basis, column([2, 3, 5]))
        assert fraction_rows(coords) == [[2], [3]]
        with pytest.raises(ValueError):
            solve_in_basis(basis, column([1, 1, 0]))


class TestMisc:
    """Test pairs and the progress wrapper"""
    def test_pairs(self):
        assert pair(3, 1) == (1, 3)
        assert all_pairs(3) == [(1, 2), (1, 3), (2, 3)]
        with pytest.raises(ValueError):
            pair(2, 2)

    def test_with_progress(self):
        items = [1, 2]
        assert with_progress(items) is items
        assert list(with_progress(items, progress=True, disable=True)) == items
