"""Betti numbers of small level-4 groups from Euler characteristics"""

from __future__ import annotations

__all__ = [
    "BettiTable",
    "pmod_level4_betti",
    "level4_betti",
    "genus2_top_bound",
    "betti_tables",
]

import logging
from dataclasses import dataclass

from level4_braids.formulas.closed_forms import level4_pmod_euler, smod_b1, smod_euler
from level4_braids.homology import dim_h1

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class BettiTable:
    group: str
    betti: tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def to_dict(self) -> dict:
        return {"group": self.group, "betti": list(self.betti), "euler": self.euler}


def pmod_level4_betti(n: int) -> tuple[int, ...]:
    """
    Betti numbers of PMod_{0,n+1}², the quotient of B_n[4] by its center.

    The group has cohomological dimension n - 2; b_1 is read off H_1(B_n[4]) and,
    when the dimension is 2, b_2 follows from the Euler characteristic.

    Raises:
        ValueError: if n is outside 2..4, where these data do not fix the table.
    """
    if not 2 <= n <= 4:
        raise ValueError(f"Betti numbers are determined only for 2 <= n <= 4, got {n}")
    chi = level4_pmod_euler(n + 1)
    if n == 2:
        betti: tuple[int, ...] = (1,)
    else:
        b1 = dim_h1(n) - 1
        betti = (1, b1) if n == 3 else (1, b1, chi - 1 + b1)
    if sum((-1) ** i * b for i, b in enumerate(betti)) != chi:
        raise ArithmeticError(f"Betti numbers {betti} disagree with χ = {chi}")
    return betti


def level4_betti(n: int) -> tuple[int, ...]:
    """
    Betti numbers of B_n[4] ≅ PMod_{0,n+1}² × Z by the Künneth formula.

    Example:
    ```python
    >>> level4_betti(4)
    (1, 21, 103, 83)
    ```
    """
    base = pmod_level4_betti(n)
    padded = (*base, 0)
    out = tuple(padded[j] + (padded[j - 1] if j else 0) for j in range(len(padded)))
    if out[1] != dim_h1(n):
        raise ArithmeticError(f"b_1 = {out[1]} but dim H_1(B_{n}[4]) = {dim_h1(n)}")
    return out


def genus2_top_bound() -> dict[str, int]:
    """
    The lower bound on b_3(Mod_2[4]).

    χ = 1 - b_1 + b_2 - b_3 gives b_3 = b_2 + (1 - b_1 - χ); b_2 is at least
    b_2(B_4[4]) - b_1 since H_2(B_5[4]) = H_2 ⊕ H_1 surjects onto H_2(B_4[4]).
    """
    chi = smod_euler(2)
    b1 = smod_b1(2)
    shift = 1 - b1 - chi
    b2_min = level4_betti(4)[2] - b1
    return {"euler": chi, "b1": b1, "b3_minus_b2": shift, "b2_min": b2_min,
            "b3_min": shift + b2_min}


def betti_tables() -> dict[str, object]:
    """
    Betti tables of B_3[4] and B_4[4] and the genus-2 bound.

    Example:
    ```python
    >>> betti_tables()["Mod_2[4]"]["b3_min"]
    3068
    ```
    """
    tables = {f"B_{n}[4]": BettiTable(f"B_{n}[4]", level4_betti(n)) for n in (3, 4)}
    tables["PMod_0,5^2"] = BettiTable("PMod_0,5^2", pmod_level4_betti(4))
    out: dict[str, object] = dict(tables)
    out["Mod_2[4]"] = genus2_top_bound()
    logger.debug("betti tables: %s", {k: v.betti for k, v in tables.items()})
    return out
