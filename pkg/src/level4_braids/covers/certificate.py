"""Linear independence of the basis S through forgetful maps and ψ"""

from __future__ import annotations

__all__ = [
    "IndependenceReport",
    "DetectionEntry",
    "detection_vector",
    "independence_certificate",
    "detection_table",
]

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from level4_braids.covers.labels import CoverIndex, PairVector, all_covers
from level4_braids.covers.psi import psi_base, psi_cover
from level4_braids.homology import (
    H1Vector,
    ModuleExpression,
    alternate_basis,
    dim_h1,
    enumerate_basis,
    forgetful,
    reduce,
)
from level4_braids.utils import with_progress
from level4_braids.utils.linalg import rank, sparse_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class IndependenceReport:
    n: int
    rank: int
    dimension: int
    rows: int

    @property
    def independent(self) -> bool:
        return self.rank == self.dimension

    def to_dict(self) -> dict:
        return {"n": self.n, "rank": self.rank, "dimension": self.dimension,
                "rows": self.rows, "independent": self.independent}


@lru_cache(maxsize=8)
def _psi_coordinates(m: int) -> dict:
    """ψ ⊕ ψ_{i∞} ⊕ ψ_{ij} of each basis symbol on m strands, as one coordinate list."""
    out = {}
    for sym in enumerate_basis(m):
        v = H1Vector.from_symbol(sym, m)
        coords = psi_base(v).coordinates()
        for cover in all_covers(m):
            coords += psi_cover(cover, v).coordinates()
        out[sym] = coords
    return out


def detection_vector(v: H1Vector) -> list[Fraction]:
    """
    Concatenated ψ-coordinates of all forgetful images of `v` on 2, 3 and 4 strands.
    """
    n = v.n
    coords: list[Fraction] = []
    for m in range(2, min(n, 4) + 1):
        table = _psi_coordinates(m)
        width = len(next(iter(table.values())))
        for A in combinations(range(1, n + 1), m):
            acc = [Fraction(0)] * width
            for sym, c in forgetful(v, A).coeffs:
                for k, x in enumerate(table[sym]):
                    if x:
                        acc[k] += c * x
            coords += acc
    return coords


def independence_certificate(n: int, *, progress: bool = False, **tqdm_kw) -> IndependenceReport:
    """
    Rank of the stacked detection map on the basis S.

    The basis is certified independent when the rank equals `dim_h1(n)`.

    Example:
    ```python
    >>> independence_certificate(3).rank
    6
    ```

    Args:
        n (int): Strand count, at least 2.
        progress (bool): Show a progress bar over basis symbols. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    basis = enumerate_basis(n)
    symbols = with_progress(basis, progress=progress, total=len(basis),
                            desc=f"certificate n={n}", **tqdm_kw)
    columns = [detection_vector(H1Vector.from_symbol(sym, n)) for sym in symbols]
    nrows = len(columns[0])
    entries: dict[int, dict[int, Fraction]] = {}
    for j, col in enumerate(columns):
        for i, x in enumerate(col):
            if x:
                entries.setdefault(i, {})[j] = x
    r = rank(sparse_matrix(entries, (nrows, len(basis))))
    logger.info("independence certificate n=%d: rank %d of %d (%d rows)", n, r, len(basis), nrows)
    return IndependenceReport(n, r, dim_h1(n), nrows)


@dataclass(frozen=True, slots=True)
class DetectionEntry:
    element: ModuleExpression
    cover: CoverIndex
    image: PairVector

    def to_dict(self) -> dict:
        return {"element": str(self.element), "cover": str(self.cover),
                "image": str(self.image)}


def detection_table(n: int) -> list[DetectionEntry]:
    """
    ψ-images of every difference element (1-T)τ and (1-T)(1-T)τ of S' under every cover.

    Zero images are included, so the result reads as a full table.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    out = []
    for e in alternate_basis(n):
        if not e.terms[0].factors:
            continue
        v = reduce(e)
        out.extend(DetectionEntry(e, cover, psi_cover(cover, v)) for cover in all_covers(n))
    return out
