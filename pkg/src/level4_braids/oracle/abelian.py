"""Integer abelianization of a finite presentation"""

from __future__ import annotations

__all__ = [
    "AbelianizationResult",
    "eliminate_units",
    "abelianization",
]

import logging
from collections import defaultdict
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from level4_braids.oracle.presentation import Presentation
from level4_braids.utils.linalg import fraction_rows, sparse_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AbelianizationResult:
    """
    H_1 of a presentation: free rank, elementary divisors above 1, and the
    functionals giving rational coordinates of H_1 ⊗ Q.

    `divisors` is None when the Smith normal form was not requested.
    """
    generators: int
    rank: int
    free_rank: int
    divisors: tuple[int, ...] | None = None
    functionals: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False)

    @property
    def odd_torsion(self) -> bool | None:
        if self.divisors is None:
            return None
        return any(d >> ((d & -d).bit_length() - 1) > 1 for d in self.divisors)

    def coordinates(self, exponents: Mapping[int, int | Fraction]) -> tuple[Fraction, ...]:
        """Rational coordinates of the class with generator exponents {column: value}."""
        return tuple(
            sum((f[c] * v for c, v in exponents.items() if f[c]), Fraction(0))
            for f in self.functionals
        )

    def to_dict(self) -> dict:
        out = {"generators": self.generators, "rank": self.free_rank,
               "relation_rank": self.rank}
        if self.divisors is not None:
            out["divisors"] = list(self.divisors)
            out["odd_torsion"] = self.odd_torsion
        return out


def eliminate_units(rows: list[Mapping[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """
    Pivot on ±1 entries until none is left, as Tietze moves removing a generator
    with each pivot.

    Returns:
        tuple[int, list[dict[int, int]]]: The number of pivots and the remaining
            nonzero rows.
    """
    live: dict[int, dict[int, int]] = {i: dict(r) for i, r in enumerate(rows) if r}
    where: dict[int, set[int]] = defaultdict(set)
    for i, r in live.items():
        for c in r:
            where[c].add(i)
    units = 0
    changed = True
    while changed:
        changed = False
        for i in list(live):
            pivot = live.get(i)
            if pivot is None:
                continue
            c = next((c for c, v in pivot.items() if abs(v) == 1), None)
            if c is None:
                continue
            del live[i]
            for k in pivot:
                where[k].discard(i)
            s = pivot[c]
            for j in list(where[c]):
                r = live[j]
                f = r[c] * s
                for k, v in pivot.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                        where[k].add(j)
                    elif k in r:
                        del r[k]
                        where[k].discard(j)
                if not r:
                    del live[j]
            units += 1
            changed = True
    return units, list(live.values())


def abelianization(
    p: Presentation,
    *,
    smith: bool = True,
    coordinates: bool = True,
) -> AbelianizationResult:
    """
    Abelianize `p` through its relator exponent matrix.

    Unit pivots are eliminated first; the Smith normal form is taken of what is left.

    Example:
    ```python
    >>> abelianization(Presentation.parse("gen a\\ngen b\\nrel a a b b")).free_rank
    1
    ```

    Args:
        p (Presentation): The presentation.
        smith (bool): Compute the elementary divisors. Defaults to True.
        coordinates (bool): Compute the rational coordinate functionals. Defaults to True.
    """
    ncols = len(p.generators)
    rows = p.exponent_rows()
    units, residual = eliminate_units(rows)
    cols = sorted({c for r in residual for c in r})
    pos = {c: k for k, c in enumerate(cols)}
    shape = (len(residual), len(cols))
    R = sparse_matrix({i: {pos[c]: v for c, v in r.items()} for i, r in enumerate(residual)},
                      shape, domain=ZZ)
    divisors = None
    if smith:
        factors = [int(x) for x in invariant_factors(R)] if 0 not in shape else []
        nonzero = sorted(abs(x) for x in factors if x)
        rank = units + len(nonzero)
        divisors = tuple(d for d in nonzero if d > 1)
    else:
        rank = units + (R.convert_to(QQ).rank() if 0 not in shape else 0)
    functionals: tuple[tuple[Fraction, ...], ...] = ()
    if coordinates:
        functionals = _functionals(rows, ncols)
    logger.debug("abelianization: %d generators, %d unit pivots, residual %s, rank %d",
                 ncols, units, shape, rank)
    return AbelianizationResult(ncols, rank, ncols - rank, divisors, functionals)


def _functionals(rows: list[dict[int, int]], ncols: int) -> tuple[tuple[Fraction, ...], ...]:
    """A basis of the solutions x of R x = 0; pairing with them kills every relator."""
    if not rows:
        return tuple(tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols))
    R = sparse_matrix(dict(enumerate(rows)), (len(rows), ncols))
    kernel: DomainMatrix = R.nullspace()
    return tuple(tuple(row) for row in fraction_rows(kernel))
