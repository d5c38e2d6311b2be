"""Winding numbers by strand tracking, and the homomorphisms ω_3, ω_4"""

from __future__ import annotations

__all__ = [
    "winding",
    "winding_numbers",
    "omega_rho",
    "stabilizer_subset",
]

from fractions import Fraction

from level4_braids.braids.subsets import I3, I4, PairSubset
from level4_braids.braids.words import BraidWord, PureBraidWord
from level4_braids.errors import NotInStabilizer
from level4_braids.utils import Pair, pair

_HALF = Fraction(1, 2)


def _as_braid(w: BraidWord | PureBraidWord) -> BraidWord:
    return w.to_braid_word() if isinstance(w, PureBraidWord) else w


def winding_numbers(w: BraidWord | PureBraidWord) -> dict[Pair, Fraction]:
    """
    All ξ_ij(w), strands labelled by their starting positions.

    Letters are consumed right to left (the first one applied is the last one
    written); each crossing adds ±1/2 to the pair of strands it exchanges.
    Pairs that never cross are omitted.
    """
    w = _as_braid(w)
    at = list(range(1, w.n + 1))
    xi: dict[Pair, Fraction] = {}
    for i, s in reversed(w.letters):
        p = pair(at[i - 1], at[i])
        xi[p] = xi.get(p, Fraction(0)) + s * _HALF
        at[i - 1], at[i] = at[i], at[i - 1]
    return {p: v for p, v in xi.items() if v}


def winding(w: BraidWord | PureBraidWord, i: int, j: int) -> Fraction:
    """
    Half-integer winding number ξ_ij of strands i and j.

    Example:
    ```python
    >>> winding(BraidWord.sigma(1, 2), 1, 2)
    Fraction(1, 2)
    ```
    """
    if i == j:
        raise ValueError("winding needs two distinct strands")
    return winding_numbers(w).get(pair(i, j), Fraction(0))


def stabilizer_subset(k: int, n: int) -> PairSubset:
    if k == 3:
        return I3(n)
    if k == 4:
        return I4(n)
    raise ValueError(f"k must be 3 or 4, got {k}")


def omega_rho(w: BraidWord | PureBraidWord, k: int) -> tuple[int, int]:
    """
    (ω_k(w), ρ_k(w)) for a braid stabilizing I_k setwise.

    ω_3 = ξ_13 + ξ_23 and ω_4 = ξ_13 + ξ_14 + ξ_23 + ξ_24; ρ_k = (-1)^ω_k.

    Raises:
        NotInStabilizer: if the permutation of `w` moves I_k.
    """
    w = _as_braid(w)
    target = stabilizer_subset(k, w.n)
    if not target.is_stabilized_by(w.permutation()):
        raise NotInStabilizer(f"{w} does not stabilize {target}")
    xi = winding_numbers(w)
    total = sum((xi.get(p, Fraction(0)) for p in target), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"ω_{k} is not integral on {w}: {total}")
    omega = int(total)
    return omega, (-1) ** (omega % 2)
