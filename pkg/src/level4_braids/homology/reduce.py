"""Reduction of module expressions to coordinates in the basis S"""

from __future__ import annotations

__all__ = [
    "reduce",
    "reduce_polynomials",
    "key_lemma_identities",
    "lantern_identities",
    "alternate_basis",
    "change_of_basis_determinant",
]

import logging
from collections.abc import Iterable, Mapping
from fractions import Fraction
from itertools import combinations

from level4_braids.homology.basis import enumerate_basis
from level4_braids.homology.expressions import Factor, ModuleExpression
from level4_braids.homology.ring import Poly, expand_polynomial, prefix_polynomial
from level4_braids.homology.vectors import H1Vector
from level4_braids.utils import Pair
from level4_braids.utils.linalg import from_qq, sparse_matrix

logger = logging.getLogger(__name__)


def reduce_polynomials(n: int, polys: Iterable[tuple[Pair, Poly]]) -> H1Vector:
    acc: dict = {}
    for target, poly in polys:
        for sym, c in expand_polynomial(target, poly).items():
            acc[sym] = acc.get(sym, Fraction(0)) + c
    return H1Vector(n, acc)


def reduce(e: ModuleExpression | H1Vector) -> H1Vector:
    """
    Coordinates of an expression in the basis S.

    Twists disjoint from a term's target are dropped, twists meeting it are
    identified through the lantern relation, products of three or more
    differences vanish, and two-difference terms are moved onto the target
    containing the smallest of their four labels.

    Example:
    ```python
    >>> str(reduce(ModuleExpression.parse("(1-T(1,3))(1-T(1,3))*t(1,2)", n=3)))
    '2*t(1,2) - 2*T(1,3)*t(1,2)'
    ```
    """
    if isinstance(e, H1Vector):
        return e
    if not isinstance(e, ModuleExpression):
        raise TypeError(f"expected ModuleExpression, got {type(e).__name__}")
    return reduce_polynomials(
        e.n, ((t.target, prefix_polynomial(t.factors, t.target, t.coeff)) for t in e.terms)
    )


def key_lemma_identities(p: int, q: int, r: int, s: int, n: int) -> list[ModuleExpression]:
    """The three two-difference identities on p<q<r<s, each written as lhs - rhs."""
    if not p < q < r < s <= n:
        raise ValueError(f"need p<q<r<s<={n}, got {(p, q, r, s)}")
    D = Factor.difference

    def side(f1: Factor, f2: Factor, i: int, j: int) -> ModuleExpression:
        return ModuleExpression.tau(i, j, n).times(f1, f2)

    return [
        side(D(p, s), D(q, r), p, q) - side(D(p, s), D(q, r), r, s),
        side(D(p, q), D(r, s), p, r) + side(D(p, q), D(r, s), q, s),
        side(D(p, r), D(q, s), p, s) - side(D(p, r), D(q, s), q, r),
    ]


def lantern_identities(i: int, j: int, k: int, l: int, n: int) -> list[ModuleExpression]:
    """T_ik τ_ij - T_jk τ_ij and T_kl τ_ij - τ_ij for distinct labels."""
    if len({i, j, k, l}) != 4 or max(i, j, k, l) > n:
        raise ValueError(f"need four distinct labels up to {n}, got {(i, j, k, l)}")
    T = Factor.twist
    tau = ModuleExpression.tau(i, j, n)
    return [tau.times(T(i, k)) - tau.times(T(j, k)), tau.times(T(k, l)) - tau]


def alternate_basis(n: int) -> list[ModuleExpression]:
    """
    The difference-form set S': τ_ij, then (1-T)τ and (1-T)(1-T)τ elements in
    the same order as `enumerate_basis(n)`.
    """
    D = Factor.difference
    tau = ModuleExpression.tau
    out = [tau(i, j, n) for i, j in combinations(range(1, n + 1), 2)]
    for i, j, k in combinations(range(1, n + 1), 3):
        out += [
            tau(i, j, n).times(D(j, k)),
            tau(i, k, n).times(D(j, k)),
            tau(j, k, n).times(D(i, j)),
        ]
    for i, j, k, l in combinations(range(1, n + 1), 4):
        out += [
            tau(i, j, n).times(D(i, l), D(j, k)),
            tau(i, k, n).times(D(i, j), D(k, l)),
            tau(i, l, n).times(D(i, k), D(j, l)),
        ]
    return out


def change_of_basis_determinant(n: int) -> Fraction:
    """Determinant of the matrix whose columns are the reduced elements of S'."""
    basis = enumerate_basis(n)
    cols = [reduce(e).to_column() for e in alternate_basis(n)]
    entries: Mapping[int, dict[int, Fraction]] = {
        i: {j: col[i] for j, col in enumerate(cols) if col[i]} for i in range(len(basis))
    }
    det = from_qq(sparse_matrix(entries, (len(basis), len(basis))).to_dense().det())
    logger.debug("det(S' -> S) for n=%d is %s", n, det)
    return det
