"""Generators of the constituents inside H_1 and the submodules they span"""

from __future__ import annotations

__all__ = [
    "OrbitSubmodule",
    "alpha_seed",
    "x3_seed",
    "x4_seed",
    "orbit_submodule",
    "seed_character_failures",
]

import logging
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from level4_braids.braids import enumerate_zn, omega_rho, stabilizer_subset
from level4_braids.config import Limits
from level4_braids.homology import Factor, H1Vector, ModuleExpression, orbit_span, reduce
from level4_braids.reps.modules import H1Module
from level4_braids.utils import all_pairs, with_progress
from level4_braids.utils.linalg import column, matrix_entries, rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class OrbitSubmodule:
    n: int
    dimension: int
    basis: DomainMatrix

    def to_dict(self) -> dict:
        return {"n": self.n, "dimension": self.dimension}


def alpha_seed(n: int, i: int = 1, j: int = 2) -> H1Vector:
    """α_ij = Π_{r<s} (1 + T_rs) τ_ij."""
    sums = [Factor.sum(*p) for p in all_pairs(n)]
    return reduce(ModuleExpression.tau(i, j, n).times(*sums))


def x3_seed(n: int) -> H1Vector:
    """x_3 = (1 - T_13) Π_{j>=4} (1 + T_1j)(1 + T_2j) τ_12."""
    if n < 3:
        raise ValueError(f"x_3 needs at least 3 strands, got {n}")
    factors = [Factor.difference(1, 3)]
    for j in range(4, n + 1):
        factors += [Factor.sum(1, j), Factor.sum(2, j)]
    return reduce(ModuleExpression.tau(1, 2, n).times(*factors))


def x4_seed(n: int) -> H1Vector:
    """x_4 = (1 - T_14)(1 - T_23) τ_12."""
    if n < 4:
        raise ValueError(f"x_4 needs at least 4 strands, got {n}")
    return reduce(ModuleExpression.tau(1, 2, n).times(Factor.difference(1, 4),
                                                        Factor.difference(2, 3)))


def orbit_submodule(seed: H1Vector | list[H1Vector], n: int | None = None) -> OrbitSubmodule:
    """
    The Z_n-submodule generated by `seed`.

    Example:
    ```python
    >>> orbit_submodule(x4_seed(4)).dimension
    3
    ```
    """
    seeds = seed if isinstance(seed, list) else [seed]
    if not seeds:
        raise ValueError("orbit_submodule needs at least one seed")
    n = seeds[0].n if n is None else n
    basis = orbit_span(seeds, n)
    dim = rank(basis)
    logger.debug("orbit submodule on %d strands: dimension %d", n, dim)
    return OrbitSubmodule(n, dim, basis)


def seed_character_failures(
    k: int,
    n: int,
    *,
    limits: Limits | None = None,
    progress: bool = False,
    **tqdm_kw,
) -> list[str]:
    """
    Words of Z_n^{I_k} on which g·x_k differs from ρ_k(g)·x_k; empty when x_k spans
    a copy of V_k(ρ_k) ⊠ V_{n-k}(0).

    Every element of the stabilizer is checked through its witness word.
    """
    seed = x3_seed(n) if k == 3 else x4_seed(n)
    target = stabilizer_subset(k, n)
    module = H1Module(n)
    vec = column(seed.to_column())
    expected = {1: matrix_entries(vec), -1: matrix_entries(vec.neg())}
    table = enumerate_zn(n, limits=limits)
    failures = []
    for idx in with_progress(range(len(table)), progress=progress, total=len(table),
                             desc=f"x_{k} on Z_{n}^I", **tqdm_kw):
        if not target.is_stabilized_by(table.permutation(idx)):
            continue
        w = table.word(idx)
        _, sign = omega_rho(w, k)
        if matrix_entries(module.apply_word(w, vec)) != expected[sign]:
            failures.append(str(w))
    logger.debug("x_%d on %d strands: %d failures", k, n, len(failures))
    return failures
