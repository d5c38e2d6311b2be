"""Distinguished classes: the boundary twist and commutators of Artin generators"""

from __future__ import annotations

__all__ = [
    "tau_boundary",
    "boundary_expression",
    "commutator_class",
]

from fractions import Fraction
from itertools import combinations
from math import comb

from level4_braids.homology.expressions import Factor, ModuleExpression
from level4_braids.homology.reduce import reduce
from level4_braids.homology.vectors import H1Vector
from level4_braids.utils import all_pairs


def boundary_expression(n: int) -> ModuleExpression:
    """2^{-C(n,2)} Π_{p<q} (1 + T_pq) Σ_{i<j} τ_ij, unreduced."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    sums = [Factor.sum(*p) for p in all_pairs(n)]
    out = ModuleExpression(n)
    for i, j in combinations(range(1, n + 1), 2):
        out = out + ModuleExpression.tau(i, j, n).times(*sums)
    return out.scale(Fraction(1, 2 ** comb(n, 2)))


def tau_boundary(n: int) -> H1Vector:
    """
    Class of the square of the boundary twist, a Z_n-invariant vector.

    Example:
    ```python
    >>> str(tau_boundary(2))
    't(1,2)'
    ```
    """
    return reduce(boundary_expression(n))


def commutator_class(i: int, j: int, k: int, n: int | None = None) -> H1Vector:
    """
    Class of [T_ij, T_jk] for i < j < k:
    ½((1 - T_ik)τ_ij + (1 - T_ij)τ_ik - (1 - T_ij)τ_jk).

    Args:
        i, j, k (int): Increasing labels.
        n (int, optional): Strand count; defaults to k.
    """
    n = k if n is None else n
    if not 1 <= i < j < k <= n:
        raise ValueError(f"need 1 <= i < j < k <= {n}, got {(i, j, k)}")
    D = Factor.difference
    e = (
        ModuleExpression.tau(i, j, n).times(D(i, k))
        + ModuleExpression.tau(i, k, n).times(D(i, j))
        - ModuleExpression.tau(j, k, n).times(D(i, j))
    )
    return reduce(e.scale(Fraction(1, 2)))
