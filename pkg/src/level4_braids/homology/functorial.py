"""Forgetful projections, stabilization and Z_n-orbit spans"""

from __future__ import annotations

__all__ = [
    "forgetful",
    "forgetful_matrix",
    "stabilization_map",
    "orbit_span",
    "orbit_span_rank",
]

import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction

from sympy.polys.matrices import DomainMatrix

from level4_braids.homology.action import Generator, generator_matrix
from level4_braids.homology.basis import enumerate_basis
from level4_braids.homology.expressions import Factor
from level4_braids.homology.reduce import reduce_polynomials
from level4_braids.homology.ring import Poly, prefix_polynomial
from level4_braids.homology.vectors import H1Vector
from level4_braids.utils import pair
from level4_braids.utils.linalg import column_basis, rank, sparse_matrix

logger = logging.getLogger(__name__)


def _check_subset(A: Iterable[int], n: int) -> tuple[int, ...]:
    kept = tuple(sorted(set(A)))
    if len(kept) < 2:
        raise ValueError(f"need at least two kept strands, got {kept}")
    if kept[0] < 1 or kept[-1] > n:
        raise ValueError(f"kept strands {kept} not in 1..{n}")
    return kept


def forgetful(v: H1Vector, A: Iterable[int]) -> H1Vector:
    """
    Image of `v` under the map forgetting the strands outside `A`.

    Kept strands are relabelled 1..|A| in increasing order. Twists through a
    forgotten strand become trivial; a target through one sends the term to 0.

    Example:
    ```python
    >>> v = H1Vector.parse("T(1,3)*t(1,2)", n=3)
    >>> str(forgetful(v, [1, 2]))
    't(1,2)'
    ```
    """
    kept = _check_subset(A, v.n)
    label = {x: k for k, x in enumerate(kept, start=1)}
    polys: list[tuple[tuple[int, int], Poly]] = []
    for sym, c in v.coeffs:
        if not set(sym.target) <= label.keys():
            continue
        target = pair(label[sym.target[0]], label[sym.target[1]])
        factors = [Factor.twist(label[a], label[b]) for a, b in sym.prefix
                   if a in label and b in label]
        polys.append((target, prefix_polynomial(factors, target, c)))
    return reduce_polynomials(len(kept), polys)


def forgetful_matrix(n: int, A: Iterable[int]) -> DomainMatrix:
    """Matrix of `forgetful` from the basis of n strands to that of |A| strands."""
    kept = _check_subset(A, n)
    source = enumerate_basis(n)
    target_dim = len(enumerate_basis(len(kept)))
    entries: dict[int, dict[int, Fraction]] = {}
    for col, sym in enumerate(source):
        image = forgetful(H1Vector.from_symbol(sym, n), kept)
        for row, c in enumerate(image.to_column()):
            if c:
                entries.setdefault(row, {})[col] = c
    return sparse_matrix(entries, (target_dim, len(source)))


def stabilization_map(v: H1Vector) -> H1Vector:
    """The inclusion H_1(B_n[4]) → H_1(B_{n+1}[4]) adding a strand on the right."""
    return v.embed(v.n + 1)


def _as_columns(vectors: Sequence[H1Vector], n: int) -> DomainMatrix:
    entries: dict[int, dict[int, Fraction]] = {}
    for col, v in enumerate(vectors):
        if v.n != n:
            raise ValueError(f"vector on {v.n} strands, expected {n}")
        for row, c in enumerate(v.to_column()):
            if c:
                entries.setdefault(row, {})[col] = c
    return sparse_matrix(entries, (len(enumerate_basis(n)), len(vectors)))


def orbit_span(vectors: Sequence[H1Vector], n: int) -> DomainMatrix:
    """
    Column basis of the smallest Z_n-submodule containing `vectors`.

    The span is closed under σ_1, ..., σ_{n-1} until its rank stops growing.
    """
    span = column_basis(_as_columns(vectors, n))
    gens = [generator_matrix(Generator.sigma(k), n) for k in range(1, n)]
    while True:
        grown = span
        for g in gens:
            grown = grown.hstack(g.matmul(span))
        grown = column_basis(grown)
        if grown.shape[1] == span.shape[1]:
            return span
        logger.debug("orbit span on %d strands grew to %d", n, grown.shape[1])
        span = grown


def orbit_span_rank(vectors: Sequence[H1Vector], n: int) -> int:
    """
    Dimension of the Z_n-span of `vectors`.

    Example:
    ```python
    >>> from level4_braids.homology import enumerate_basis
    >>> images = [stabilization_map(H1Vector.from_symbol(s, 3)) for s in enumerate_basis(3)]
    >>> orbit_span_rank(images, 4)
    21
    ```
    """
    if not vectors:
        return 0
    return rank(orbit_span(vectors, n))
