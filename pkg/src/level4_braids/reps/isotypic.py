"""Splitting modules into PZ_n-isotypic components"""

from __future__ import annotations

__all__ = [
    "IsotypicReport",
    "isotypic_decomposition",
    "isotypic_component",
]

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from level4_braids.braids import PairSubset
from level4_braids.errors import NonInvolutive
from level4_braids.reps.modules import Representation
from level4_braids.utils import Pair, all_pairs
from level4_braids.utils.linalg import column_basis, identity_matrix, is_identity

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class IsotypicReport:
    """
    The V_I-eigenspaces of a PZ_n-module, keyed by I; only nonzero ones are stored.

    Args:
        n (int): Strand count.
        dimension (int): Dimension of the whole module.
        blocks (dict[PairSubset, DomainMatrix]): Column bases of the eigenspaces.
    """
    n: int
    dimension: int
    blocks: dict[PairSubset, DomainMatrix]

    def dims(self) -> dict[PairSubset, int]:
        return {I: B.shape[1] for I, B in sorted(self.blocks.items())}

    def multiplicity(self, I: PairSubset) -> int:
        """Number of copies of V_I; 0 when I does not occur."""
        block = self.blocks.get(I)
        return 0 if block is None else block.shape[1]

    def subsets(self) -> list[PairSubset]:
        return sorted(self.blocks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dimension": self.dimension,
            "blocks": [{"I": [list(p) for p in I], "dim": d} for I, d in self.dims().items()],
        }


def _twists(
    module: Representation | Mapping[Pair, DomainMatrix], n: int | None
) -> tuple[int, dict[Pair, DomainMatrix]]:
    if isinstance(module, Representation):
        return module.n, {p: module.twist_matrix(*p) for p in all_pairs(module.n)}
    if n is None:
        raise ValueError("n is required when twist matrices are given directly")
    missing = set(all_pairs(n)) - set(module)
    if missing:
        raise ValueError(f"missing twist matrices for {sorted(missing)}")
    return n, {p: module[p] for p in all_pairs(n)}


def _check_involution(p: Pair, m: DomainMatrix) -> None:
    if not is_identity(m.matmul(m)):
        raise NonInvolutive(f"the matrix of T{p} does not square to the identity")


def isotypic_decomposition(
    module: Representation | Mapping[Pair, DomainMatrix],
    n: int | None = None,
) -> IsotypicReport:
    """
    Simultaneous ±1-eigenspaces of the commuting involutions T_ij.

    The component where T_ij acts by -1 exactly for {i,j} in I is the
    I-isotypic part.

    Example:
    ```python
    >>> report = isotypic_decomposition(H1Module(3))
    >>> report.multiplicity(PairSubset(3))
    3
    ```

    Args:
        module (Representation | Mapping): A module, or the matrices of the T_ij keyed by pair.
        n (int, optional): Strand count; required when matrices are given directly.

    Raises:
        NonInvolutive: if some T_ij matrix does not square to the identity.
    """
    n, twists = _twists(module, n)
    dim = next(iter(twists.values())).shape[0] if twists else getattr(module, "dim", 0)
    blocks: list[tuple[tuple[Pair, ...], DomainMatrix]] = [((), identity_matrix(dim))]
    if dim == 0:
        blocks = []
    for p, m in twists.items():
        _check_involution(p, m)
        split = []
        for minus, B in blocks:
            image = m.matmul(B)
            plus_part = column_basis(B + image)
            minus_part = column_basis(B - image)
            if plus_part.shape[1]:
                split.append((minus, plus_part))
            if minus_part.shape[1]:
                split.append((minus + (p,), minus_part))
        blocks = split
    out = {PairSubset(n, minus): B for minus, B in blocks}
    logger.debug("isotypic decomposition on %d strands: %d components", n, len(out))
    return IsotypicReport(n, dim, out)


def isotypic_component(module: Representation, I: PairSubset) -> DomainMatrix:
    """Column basis of the I-isotypic part of `module` alone."""
    if I.n != module.n:
        raise ValueError(f"pair subset on {I.n} strands, module on {module.n}")
    B = identity_matrix(module.dim)
    for p in all_pairs(module.n):
        if B.shape[1] == 0:
            break
        m = module.twist_matrix(*p)
        _check_involution(p, m)
        image = m.matmul(B)
        B = column_basis(B - image if p in I else B + image)
    return B
