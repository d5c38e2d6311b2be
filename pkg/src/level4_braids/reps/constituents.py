"""The irreducibles V_n(ρ, λ), their dimensions and induced characters"""

from __future__ import annotations

__all__ = [
    "RhoTag",
    "IrrepLabel",
    "five_constituents",
    "constituent_dimension",
    "coset_permutations",
    "constituent_value",
    "induced_character",
    "induced_inner_product",
]

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from level4_braids.braids import (
    I3,
    I4,
    BraidWord,
    PairSubset,
    ZnTable,
    enumerate_zn,
    omega_rho,
    permutation_braid,
)
from level4_braids.config import Limits
from level4_braids.reps.characters import (
    CharacterVector,
    cycle_type,
    hook_dimension,
    is_partition,
    padded_partition,
    sn_character,
)
from level4_braids.reps.classes import ConjugacyClasses, conjugacy_classes

logger = logging.getLogger(__name__)


class RhoTag(str, Enum):
    TRIVIAL = "1"
    RHO3 = "rho3"
    RHO4 = "rho4"


@dataclass(frozen=True, slots=True, init=False)
class IrrepLabel:
    """
    V_n(ρ, λ) = Ind_{Z_n^I}^{Z_n}(V_m(ρ) ⊠ V_{n-m}(λ)).

    Example:
    ```python
    >>> str(IrrepLabel.rho3())
    'V(rho3,(0))'
    >>> constituent_dimension(IrrepLabel.rho3(), 4)
    12
    ```

    Args:
        m (int): Size of the support of I.
        I (PairSubset | Iterable): Full subset of pairs of [m].
        rho (RhoTag | str): The I-isotypic irreducible of Z_m^I.
        lam (Sequence[int]): Padded partition; () stands for (0).
    """
    m: int = field()
    I: PairSubset = field()
    rho: RhoTag = field()
    lam: tuple[int, ...] = field()

    def __init__(self, m: int, I: PairSubset | Iterable[Sequence[int]] = (),
                 rho: RhoTag | str = RhoTag.TRIVIAL, lam: Sequence[int] = ()):
        if not isinstance(I, PairSubset):
            I = PairSubset(m, I)
        if I.n != m:
            raise ValueError(f"I must be a subset of pairs of [{m}], got one on {I.n} strands")
        if not I.is_full(m):
            raise ValueError(f"{I} is not full for [{m}]")
        rho = RhoTag(rho)
        expected = {RhoTag.TRIVIAL: PairSubset(m), RhoTag.RHO3: I3(3), RhoTag.RHO4: I4(4)}[rho]
        if I != expected:
            raise ValueError(f"{rho.value} is not an irreducible for I={I}")
        lam = tuple(int(x) for x in lam if x)
        if not is_partition(lam):
            raise ValueError(f"not a partition: {lam}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "lam", lam)

    @classmethod
    def trivial(cls, lam: Sequence[int] = ()) -> IrrepLabel:
        return cls(0, (), RhoTag.TRIVIAL, lam)

    @classmethod
    def rho3(cls, lam: Sequence[int] = ()) -> IrrepLabel:
        return cls(3, I3(3), RhoTag.RHO3, lam)

    @classmethod
    def rho4(cls, lam: Sequence[int] = ()) -> IrrepLabel:
        return cls(4, I4(4), RhoTag.RHO4, lam)

    def padded(self, n: int) -> tuple[int, ...]:
        """The S_{n-m} partition of λ."""
        if n < self.m:
            raise ValueError(f"{self} needs at least {self.m} strands")
        return padded_partition(self.lam, n - self.m)

    def is_valid_for(self, n: int) -> bool:
        try:
            self.padded(n)
        except ValueError:
            return False
        return True

    def sort_key(self) -> tuple:
        return (self.m, self.I.pairs, self.rho.value, self.lam)

    def __str__(self) -> str:
        lam = ",".join(map(str, self.lam)) or "0"
        return f"V({self.rho.value},({lam}))"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "I": [list(p) for p in self.I],
            "rho": self.rho.value,
            "lambda": list(self.lam),
        }


def five_constituents(n: int) -> list[IrrepLabel]:
    """
    The irreducibles occurring in H_1(B_n[4]; C), each with multiplicity one.

    V(1,(k)) occurs for k <= min(2, n-2), V(ρ3,(0)) for n >= 3 and V(ρ4,(0)) for n >= 4.
    """
    labels = [IrrepLabel.trivial((k,) if k else ()) for k in range(min(2, n - 2) + 1)]
    if n >= 3:
        labels.append(IrrepLabel.rho3())
    if n >= 4:
        labels.append(IrrepLabel.rho4())
    return labels


@lru_cache(maxsize=64)
def _coset_permutations(pairs: tuple, m: int, n: int) -> tuple[tuple[PairSubset, tuple[int, ...]], ...]:
    I = PairSubset(m, pairs).embed(n)
    found: dict[PairSubset, tuple[int, ...]] = {}
    for perm in permutations(range(1, n + 1)):
        J = I.image(perm)
        if J not in found:
            found[J] = perm
    return tuple(sorted(found.items()))


def coset_permutations(label: IrrepLabel, n: int) -> list[tuple[PairSubset, tuple[int, ...]]]:
    """
    One permutation π with π(I) = J for every J in the S_n-orbit of I.

    These index the cosets of Z_n^I in Z_n.
    """
    return list(_coset_permutations(label.I.pairs, label.m, n))


def constituent_dimension(label: IrrepLabel, n: int) -> int:
    """[Z_n : Z_n^I] · dim ρ · dim λ; the index is the size of the S_n-orbit of I."""
    return len(coset_permutations(label, n)) * hook_dimension(label.padded(n))


def constituent_value(label: IrrepLabel, h: BraidWord) -> int:
    """
    The character of V_m(ρ) ⊠ V_{n-m}(λ) at a braid h in Z_n^I.

    ρ is read through ω_3 or ω_4 and λ through the permutation of strands m+1..n.
    """
    n, m = h.n, label.m
    if label.rho is RhoTag.TRIVIAL:
        sign = 1
    else:
        _, sign = omega_rho(h, 3 if label.rho is RhoTag.RHO3 else 4)
    perm = h.permutation()
    tail = tuple(perm[k] - m for k in range(m, n))
    if sorted(tail) != list(range(1, n - m + 1)):
        raise ValueError(f"{h} does not preserve the first {m} strands")
    return sign * sn_character(label.padded(n), cycle_type(tail))


def induced_character(
    label: IrrepLabel,
    n: int,
    *,
    table: ZnTable | None = None,
    classes: ConjugacyClasses | None = None,
    limits: Limits | None = None,
) -> CharacterVector:
    """
    Character of V_n(ρ, λ) on the conjugacy classes of Z_n.

    χ(g) = Σ ψ(x_J⁻¹ g x_J) over the cosets x_J Z_n^I whose J = x_J(I) is fixed by g.

    Args:
        label (IrrepLabel): The irreducible.
        n (int): Strand count.
        table (ZnTable, optional): Enumerated Z_n; built when omitted.
        classes (ConjugacyClasses, optional): Its classes; built when omitted.
        limits (Limits, optional): Bounds for the enumeration.
    """
    if not label.is_valid_for(n):
        raise ValueError(f"{label} is not defined for n={n}")
    table = table or enumerate_zn(n, limits=limits)
    classes = classes or conjugacy_classes(table)
    cosets = [(J, permutation_braid(perm)) for J, perm in coset_permutations(label, n)]
    values = []
    for rep in classes.representatives:
        w = table.word(rep)
        perm = w.permutation()
        total = 0
        for J, x in cosets:
            if J.image(perm) == J:
                total += constituent_value(label, x.inverse() * w * x)
        values.append(Fraction(total))
    logger.debug("induced character of %s on Z_%d: degree %s", label, n,
                 values[classes.identity_class])
    return classes.character(tuple(values))


def induced_inner_product(a: IrrepLabel, b: IrrepLabel, n: int, *,
                          limits: Limits | None = None) -> Fraction:
    """⟨χ_a, χ_b⟩ over Z_n; 1 on the diagonal and 0 off it for distinct irreducibles."""
    table = enumerate_zn(n, limits=limits)
    classes = conjugacy_classes(table)
    return induced_character(a, n, table=table, classes=classes).inner_product(
        induced_character(b, n, table=table, classes=classes))
