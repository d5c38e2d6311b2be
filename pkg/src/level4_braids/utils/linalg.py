"""Exact rational matrices on top of sympy's DomainMatrix"""

from __future__ import annotations

__all__ = [
    "to_qq",
    "from_qq",
    "sparse_matrix",
    "dense_matrix",
    "identity_matrix",
    "matrix_entries",
    "fraction_rows",
    "column",
    "column_basis",
    "rank",
    "is_identity",
    "trace",
    "solve_in_basis",
]

from collections.abc import Mapping, Sequence
from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

Rational = Fraction | int


def to_qq(x: Rational):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def sparse_matrix(
    entries: Mapping[int, Mapping[int, Rational]],
    shape: tuple[int, int],
    domain=QQ,
) -> DomainMatrix:
    """Sparse DomainMatrix from {row: {col: value}}, zero entries dropped."""
    conv = (lambda v: ZZ(int(v))) if domain == ZZ else to_qq
    rows = {}
    for i, row in entries.items():
        kept = {j: conv(v) for j, v in row.items() if v}
        if kept:
            rows[i] = kept
    return DomainMatrix(rows, shape, domain)


def dense_matrix(rows: Sequence[Sequence[Rational]], domain=QQ) -> DomainMatrix:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    return sparse_matrix({i: dict(enumerate(r)) for i, r in enumerate(rows)},
                         (nrows, ncols), domain)


def identity_matrix(n: int) -> DomainMatrix:
    return sparse_matrix({i: {i: 1} for i in range(n)}, (n, n))


def fraction_rows(m: DomainMatrix) -> list[list[Fraction]]:
    return [[from_qq(x) for x in row] for row in m.convert_to(QQ).to_list()]


def matrix_entries(m: DomainMatrix) -> dict[int, dict[int, Fraction]]:
    """Nonzero entries as {row: {col: Fraction}}."""
    out: dict[int, dict[int, Fraction]] = {}
    for i, row in enumerate(fraction_rows(m)):
        kept = {j: v for j, v in enumerate(row) if v}
        if kept:
            out[i] = kept
    return out


def column(values: Sequence[Rational]) -> DomainMatrix:
    return sparse_matrix({i: {0: v} for i, v in enumerate(values)}, (len(values), 1))


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return m.convert_to(QQ).rank()


def column_basis(m: DomainMatrix) -> DomainMatrix:
    """Columns of `m` at the pivot positions of its reduced row echelon form."""
    nrows, ncols = m.shape
    if ncols == 0 or nrows == 0:
        return sparse_matrix({}, (nrows, 0))
    m = m.convert_to(QQ)
    _, pivots = m.rref()
    return m.extract(list(range(nrows)), list(pivots))


def is_identity(m: DomainMatrix) -> bool:
    nrows, ncols = m.shape
    return nrows == ncols and matrix_entries(m) == {i: {i: Fraction(1)} for i in range(nrows)}


def trace(m: DomainMatrix) -> Fraction:
    rows = fraction_rows(m)
    return sum((rows[i][i] for i in range(len(rows))), Fraction(0))


def solve_in_basis(basis: DomainMatrix, vectors: DomainMatrix) -> DomainMatrix:
    """
    Coordinates X with basis·X = vectors, for a basis of full column rank.

    Raises:
        ValueError: if some column of `vectors` is outside the span.
    """
    nrows, k = basis.shape
    if k == 0:
        return sparse_matrix({}, (0, vectors.shape[1]))
    _, pivots = basis.convert_to(QQ).transpose().rref()
    if len(pivots) != k:
        raise ValueError("basis columns are not independent")
    rows = list(pivots)
    square = basis.convert_to(QQ).extract(rows, list(range(k)))
    coords = square.inv().matmul(vectors.convert_to(QQ).extract(rows, list(range(vectors.shape[1]))))
    if matrix_entries(basis.convert_to(QQ).matmul(coords)) != matrix_entries(vectors):
        raise ValueError("vectors are not in the span of the basis")
    return coords
