"""Multiplicities of the irreducibles V_n(ρ, λ) in a Z_n-module"""

from __future__ import annotations

__all__ = [
    "DecompositionRow",
    "stabilizer_words",
    "multiplicity",
    "multiplicity_full",
    "decomposition",
]

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from level4_braids.braids import BraidWord, enumerate_zn, omega_rho, permutation_braid
from level4_braids.config import Limits
from level4_braids.reps.characters import (
    centralizer_order,
    cycle_type_representative,
    partitions,
    sn_character,
)
from level4_braids.reps.classes import conjugacy_classes, zn_character
from level4_braids.reps.constituents import (
    IrrepLabel,
    RhoTag,
    constituent_dimension,
    five_constituents,
    induced_character,
)
from level4_braids.reps.isotypic import isotypic_component
from level4_braids.reps.modules import H1Module, Representation
from level4_braids.utils import with_progress

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DecompositionRow:
    label: IrrepLabel
    dim: int
    multiplicity: int

    def to_dict(self) -> dict:
        return {"label": self.label.to_dict(), "name": str(self.label),
                "dim": self.dim, "multiplicity": self.multiplicity}


def stabilizer_words(label: IrrepLabel, *, limits: Limits | None = None) -> list[tuple[BraidWord, int]]:
    """
    Witness words of Z_m^I with the value of ρ on each.

    For m < 2 the group is trivial and only the empty word is returned.
    """
    return list(_stabilizer_words(label, limits or Limits.from_env()))


@lru_cache(maxsize=16)
def _stabilizer_words(label: IrrepLabel, limits: Limits) -> tuple[tuple[BraidWord, int], ...]:
    m = label.m
    if m < 2:
        return ((BraidWord(1), 1),)
    table = enumerate_zn(m, limits=limits)
    out = []
    for idx in range(len(table)):
        if not label.I.is_stabilized_by(table.permutation(idx)):
            continue
        w = table.word(idx)
        sign = 1 if label.rho is RhoTag.TRIVIAL else omega_rho(w, 3 if label.rho is RhoTag.RHO3 else 4)[1]
        out.append((w, sign))
    return tuple(out)


def _shifted(perm: tuple[int, ...], m: int, n: int) -> BraidWord:
    """Positive lift of a permutation of m+1..n, given on 1..n-m."""
    if not perm:
        return BraidWord(n)
    return BraidWord(n, [(k + m, s) for k, s in permutation_braid(perm).letters])


def multiplicity(
    label: IrrepLabel,
    module: Representation | None = None,
    n: int | None = None,
    *,
    limits: Limits | None = None,
    progress: bool = False,
    **tqdm_kw,
) -> int:
    """
    Multiplicity of V_n(ρ, λ) in `module`, through its I-isotypic block.

    Hom_{Z_n}(V_n(ρ,λ), M) is Hom_{Z_n^I}(V_m(ρ) ⊠ V(λ), M_I) for the I-isotypic
    part M_I. The kernel of Z_n^I → Z_m^I × S_{n-m} acts trivially on M_I, so the
    inner product is taken over Z_m^I × S_{n-m}, lifting each pair to a word.

    Example:
    ```python
    >>> multiplicity(IrrepLabel.rho4(), n=4)
    1
    ```

    Args:
        label (IrrepLabel): The irreducible.
        module (Representation, optional): Defaults to H_1(B_n[4]; Q).
        n (int, optional): Strand count; read from `module` when omitted.
        limits (Limits, optional): Bounds for enumerating Z_m.
        progress (bool): Show a progress bar over Z_m^I. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.
    """
    if module is None:
        if n is None:
            raise ValueError("pass a module or a strand count")
        module = H1Module(n)
    n = module.n
    if not label.is_valid_for(n):
        raise ValueError(f"{label} is not defined for n={n}")
    m = label.m
    block = isotypic_component(module, label.I.embed(n))
    if block.shape[1] == 0:
        return 0
    words = stabilizer_words(label, limits=limits)
    tail = [(
        _shifted(cycle_type_representative(mu), m, n),
        factorial(n - m) // centralizer_order(mu),
        sn_character(label.padded(n), mu),
    ) for mu in partitions(n - m)]
    total = Fraction(0)
    for a, sign in with_progress(words, progress=progress, total=len(words),
                                 desc=f"multiplicity {label}", **tqdm_kw):
        head = BraidWord(n, a.letters)
        for lift, size, chi in tail:
            if chi:
                total += size * sign * chi * module.restricted_trace(head * lift, block)
    value = total / (len(words) * factorial(n - m))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"multiplicity of {label} came out as {value}")
    logger.debug("multiplicity of %s on %d strands: %s", label, n, value)
    return int(value)


def multiplicity_full(
    label: IrrepLabel,
    module: Representation | None = None,
    n: int | None = None,
    *,
    limits: Limits | None = None,
) -> int:
    """Multiplicity as the inner product of characters over all of Z_n."""
    if module is None:
        if n is None:
            raise ValueError("pass a module or a strand count")
        module = H1Module(n)
    n = module.n
    table = enumerate_zn(n, limits=limits)
    classes = conjugacy_classes(table)
    value = zn_character(module, table, classes).inner_product(
        induced_character(label, n, table=table, classes=classes))
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"multiplicity of {label} came out as {value}")
    return int(value)


def decomposition(
    n: int,
    module: Representation | None = None,
    *,
    labels: list[IrrepLabel] | None = None,
    limits: Limits | None = None,
    progress: bool = False,
) -> list[DecompositionRow]:
    """
    Dimension and multiplicity of each constituent of H_1(B_n[4]; C).

    Example:
    ```python
    >>> [row.multiplicity for row in decomposition(4)]
    [1, 1, 1, 1, 1]
    ```
    """
    module = module or H1Module(n)
    rows = []
    for label in labels or five_constituents(n):
        rows.append(DecompositionRow(label, constituent_dimension(label, n),
                                     multiplicity(label, module, limits=limits, progress=progress)))
    logger.info("decomposed n=%d into %d labels", n, len(rows))
    return rows
