"""Closed formulas for level-4 braid and hyperelliptic mapping class groups"""

from __future__ import annotations

__all__ = [
    "FormulaReport",
    "pmod_euler",
    "pmod_level4_index",
    "level4_pmod_euler",
    "smod_euler",
    "smod_b1",
    "v2lambda2_dimension",
    "torelli_quartic",
    "closed_forms",
]

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from level4_braids.homology import dim_h1

Exact = int | Fraction


@dataclass(frozen=True, slots=True)
class FormulaReport:
    """
    Named exact values for one parameter.

    Example:
    ```python
    >>> closed_forms(2)["euler_smod"]
    -3072
    ```
    """
    parameter: str
    value: int
    values: dict[str, Exact] = field(default_factory=dict)

    def __getitem__(self, key: str) -> Exact:
        return self.values[key]

    def to_dict(self) -> dict:
        return {self.parameter: self.value, **self.values}


def _check_positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be int, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be at least 1, got {value}")


def pmod_euler(m: int) -> int:
    """χ(PMod_{0,m}) = (-1)^{m-3} (m-3)! for m >= 3."""
    if m < 3:
        raise ValueError(f"need at least 3 marked points, got {m}")
    return (-1) ** (m - 3) * factorial(m - 3)


def pmod_level4_index(m: int) -> int:
    """[PMod_{0,m} : PMod_{0,m}²] = 2^{C(m-1,2) - 1}."""
    if m < 3:
        raise ValueError(f"need at least 3 marked points, got {m}")
    return 2 ** (comb(m - 1, 2) - 1)


def level4_pmod_euler(m: int) -> int:
    """χ(PMod_{0,m}²), the index times χ(PMod_{0,m})."""
    return pmod_level4_index(m) * pmod_euler(m)


def smod_euler(g: int) -> int:
    """χ(SMod_g[4]) = -2^{C(2g+1,2) - 1} (2g-1)!, through SMod_g[4] ≅ PMod_{0,2g+2}²."""
    _check_positive("g", g)
    return level4_pmod_euler(2 * g + 2)


def smod_b1(g: int) -> int:
    """dim H_1(SMod_g[4]; Q), one less than dim H_1(B_{2g+1}[4]; Q)."""
    _check_positive("g", g)
    return dim_h1(2 * g + 1) - 1


def v2lambda2_dimension(g: int) -> int:
    """dim V(2λ_2) = g(g-1)(4g² + 4g - 3)/3."""
    _check_positive("g", g)
    return g * (g - 1) * (4 * g * g + 4 * g - 3) // 3


def torelli_quartic(g: int, constant: int = -6) -> Fraction:
    """(20g⁴ + 12g³ - 5g² + 9g + constant)/6."""
    return Fraction(20 * g**4 + 12 * g**3 - 5 * g**2 + 9 * g + constant, 6)


def closed_forms(g: int | None = None, *, n: int | None = None) -> FormulaReport:
    """
    Every closed formula for a genus `g`, or for a strand count `n`.

    For g the hyperelliptic Torelli bound is the sum of dim H_1(SMod_g[4]) and
    dim V(2λ_2); the braid Torelli group B I_{2g+1} ≅ SI_g × Z gets one more.
    Both quartic forms are reported next to the sum.

    Example:
    ```python
    >>> closed_forms(3)["torelli_bound"]
    320
    >>> closed_forms(n=5)["dim_h1"]
    55
    ```

    Raises:
        ValueError: if neither or both parameters are given, or one is below 1.
    """
    if (g is None) == (n is None):
        raise ValueError("pass exactly one of g and n")
    if n is not None:
        _check_positive("n", n)
        values: dict[str, Exact] = {
            "dim_h1": dim_h1(n),
            "cd": n - 1,
            "euler": 0,
        }
        if n >= 2:
            values["index_in_pure"] = 2 ** comb(n, 2)
            values["euler_pmod_level4"] = level4_pmod_euler(n + 1)
            values["cd_pmod_level4"] = n - 2
        return FormulaReport("n", n, values)
    _check_positive("g", g)
    b1 = smod_b1(g)
    v = v2lambda2_dimension(g)
    bound = b1 + v
    quartic = torelli_quartic(g)
    return FormulaReport("g", g, {
        "euler_smod": smod_euler(g),
        "b1_smod": b1,
        "cd_smod": 2 * g - 1,
        "dim_v2lambda2": v,
        "torelli_bound": bound,
        "braid_torelli_bound": bound + 1,
        "quartic_minus6": quartic,
        "quartic_no_constant": torelli_quartic(g, 0),
        "quartic_matches_bound": quartic == bound,
    })
