"""Helper functions for tests"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from level4_braids.homology import H1Vector, ModuleExpression, reduce
from level4_braids.utils import is_identity, matrix_entries


def assert_identity(m: DomainMatrix):
    assert m.shape[0] == m.shape[1]
    assert is_identity(m)


def assert_same_matrix(a: DomainMatrix, b: DomainMatrix):
    assert a.shape == b.shape
    assert matrix_entries(a) == matrix_entries(b)


def assert_reduces_to_zero(e: ModuleExpression):
    v = reduce(e)
    assert not v, f"{e} reduced to {v}"


def assert_vector(v: H1Vector, expected: dict[str, Fraction | int]):
    assert {str(s): c for s, c in v.coeffs} == {k: Fraction(c) for k, c in expected.items()}
