"""Exact comparison of odd Betti numbers of SMod_g[4] with exterior powers of H^1"""

from __future__ import annotations

__all__ = [
    "AlbaneseWitness",
    "albanese_inequality",
    "albanese_range",
]

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from level4_braids.formulas.closed_forms import smod_b1, smod_euler


@dataclass(frozen=True, slots=True)
class AlbaneseWitness:
    """
    Both sides of (|χ| - b_1)/(g-1) > C(b_1, 2g-1).

    The left side bounds some odd Betti number b_{2k-1} from below, the right side
    bounds every cup-product image in degrees 2..2g-1 from above.
    """
    g: int
    b1: int
    lhs: Fraction
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs

    @property
    def lhs_digits(self) -> int:
        return len(str(self.lhs.numerator // self.lhs.denominator))

    @property
    def rhs_digits(self) -> int:
        return len(str(self.rhs))

    @property
    def in_range(self) -> bool:
        """Whether g is in the range where the inequality is claimed."""
        return self.g >= 7

    def to_dict(self) -> dict:
        return {"g": self.g, "b1": self.b1, "lhs": self.lhs, "rhs": self.rhs,
                "holds": self.holds, "lhs_digits": self.lhs_digits,
                "rhs_digits": self.rhs_digits, "in_range": self.in_range}


def albanese_inequality(g: int) -> AlbaneseWitness:
    """
    Evaluate both sides with exact integers.

    Example:
    ```python
    >>> w = albanese_inequality(7)
    >>> w.holds, w.lhs_digits, w.rhs_digits
    (True, 41, 39)
    ```

    Raises:
        ValueError: if g < 2.
    """
    if g < 2:
        raise ValueError(f"g must be at least 2, got {g}")
    b1 = smod_b1(g)
    lhs = Fraction(-smod_euler(g) - b1, g - 1)
    return AlbaneseWitness(g, b1, lhs, comb(b1, 2 * g - 1))


def albanese_range(start: int, stop: int) -> list[AlbaneseWitness]:
    """Witnesses for start <= g <= stop."""
    return [albanese_inequality(g) for g in range(start, stop + 1)]
