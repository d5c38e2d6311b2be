"""The abelianization of the finite group Z_n"""

from __future__ import annotations

__all__ = [
    "derived_subgroup",
    "zn_abelianization",
]

import logging

from level4_braids.braids import BraidWord, ZnTable, burau_mod, commutator, enumerate_zn
from level4_braids.config import Limits, check_bound

logger = logging.getLogger(__name__)


def derived_subgroup(table: ZnTable) -> set[int]:
    """
    [Z_n, Z_n] as element indices: the normal closure of the [σ_i, σ_j].

    The commutators are closed under conjugation by the generators first, then
    the subgroup they generate is built by right multiplication.
    """
    n = table.n
    gens = set()
    for i in range(1, n):
        for j in range(i + 1, n):
            word = commutator(BraidWord.sigma(i, n), BraidWord.sigma(j, n))
            gens.add(table.index_of(burau_mod(word, 4)))
    if n > 1:
        conj = table.conjugation_by_generators()
        stack = list(gens)
        while stack:
            x = stack.pop()
            for y in conj[x]:
                y = int(y)
                if y not in gens:
                    gens.add(y)
                    stack.append(y)
    subgroup = {table.identity}
    stack = [table.identity]
    while stack:
        x = stack.pop()
        for g in gens:
            y = table.multiply(x, g)
            if y not in subgroup:
                subgroup.add(y)
                stack.append(y)
    return subgroup


def zn_abelianization(n: int, *, limits: Limits | None = None) -> list[int]:
    """
    Elementary divisors of H_1(Z_n; Z).

    The σ_i are conjugate, so the abelianization is cyclic, generated by the
    image of σ_1, of order |Z_n| / |[Z_n, Z_n]|.

    Example:
    ```python
    >>> zn_abelianization(3)
    [4]
    ```

    Raises:
        BoundExceeded: if n > 4.
    """
    check_bound("n", n, 4)
    table = enumerate_zn(n, limits=limits)
    order = len(table) // len(derived_subgroup(table))
    logger.debug("Z_%d has abelianization of order %d", n, order)
    return [order] if order > 1 else []
