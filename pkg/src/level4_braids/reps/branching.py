"""Restriction of the irreducibles V_n(ρ, λ) to PZ_n"""

from __future__ import annotations

__all__ = [
    "branching",
    "pure_restriction",
]

from collections.abc import Iterable

from level4_braids.braids import PairSubset
from level4_braids.reps.characters import hook_dimension
from level4_braids.reps.constituents import IrrepLabel, coset_permutations


def branching(label: IrrepLabel, n: int) -> list[tuple[PairSubset, int]]:
    """
    Res_{PZ_n} V_n(ρ, λ): dim ρ · dim λ copies of V_J for each J in the orbit of I.

    Example:
    ```python
    >>> [(str(J), k) for J, k in branching(IrrepLabel.rho4(), 4)]
    [('{12,13,24,34}', 1), ('{12,14,23,34}', 1), ('{13,14,23,24}', 1)]
    ```
    """
    copies = hook_dimension(label.padded(n))
    return [(J, copies) for J, _ in coset_permutations(label, n)]


def pure_restriction(labels: Iterable[IrrepLabel], n: int) -> dict[PairSubset, int]:
    """Summed restrictions of a direct sum of irreducibles, keyed by J."""
    out: dict[PairSubset, int] = {}
    for label in labels:
        for J, k in branching(label, n):
            out[J] = out.get(J, 0) + k
    return dict(sorted(out.items()))
