"""Symmetric-group characters, padded partitions and class functions"""

from __future__ import annotations

__all__ = [
    "Partition",
    "CharacterVector",
    "is_partition",
    "padded_partition",
    "partitions",
    "hook_dimension",
    "cycle_type",
    "centralizer_order",
    "cycle_type_representative",
    "sn_character",
    "rho_character",
]

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from level4_braids.braids import PairSubset, PZnElement
from level4_braids.errors import ShapeMismatch
from level4_braids.utils import format_rational

Partition = tuple[int, ...]


def is_partition(p: Sequence[int]) -> bool:
    """Positive, non-increasing parts."""
    return all(x > 0 for x in p) and all(a >= b for a, b in zip(p, p[1:]))


def padded_partition(lam: Sequence[int], size: int) -> Partition:
    """
    The partition (size - |λ|, λ_1, λ_2, ...) named by the padded partition λ.

    Example:
    ```python
    >>> padded_partition((1,), 4)
    (3, 1)
    >>> padded_partition((), 3)
    (3,)
    ```

    Raises:
        ValueError: if λ is not a partition or the padding is shorter than λ_1.
    """
    lam = tuple(int(x) for x in lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    first = size - sum(lam)
    if lam and first < lam[0]:
        raise ValueError(f"λ={lam} cannot be padded to size {size}")
    if first < 0:
        raise ValueError(f"λ={lam} is larger than {size}")
    return (first, *lam) if first else lam


def partitions(k: int) -> list[Partition]:
    """All partitions of k, in decreasing lexicographic order."""
    out: list[Partition] = []

    def build(rest: int, cap: int, acc: tuple[int, ...]) -> None:
        if rest == 0:
            out.append(acc)
            return
        for part in range(min(rest, cap), 0, -1):
            build(rest - part, part, acc + (part,))

    build(k, k, ())
    return out


def hook_dimension(p: Sequence[int]) -> int:
    """Dimension of the S_|p| irreducible of shape p, by the hook length formula."""
    p = tuple(p)
    if not is_partition(p):
        raise ValueError(f"not a partition: {p}")
    conj = [sum(1 for x in p if x > c) for c in range(p[0])] if p else []
    hooks = prod(p[r] - c + conj[c] - r - 1 for r in range(len(p)) for c in range(p[r]))
    return factorial(sum(p)) // hooks


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle lengths of a permutation given by its 1-based images, largest first."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def centralizer_order(mu: Sequence[int]) -> int:
    """z_μ = Π i^{m_i} m_i!, so the class of cycle type μ in S_k has k!/z_μ elements."""
    return prod(i ** m * factorial(m) for i, m in Counter(mu).items())


def cycle_type_representative(mu: Sequence[int]) -> tuple[int, ...]:
    """The permutation with consecutive cycles of lengths μ_1, μ_2, ..."""
    images: list[int] = []
    start = 1
    for part in mu:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return tuple(images)


def _beta_to_partition(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(x for x in (b - (length - 1 - k) for k, b in enumerate(beta)) if x > 0)


@lru_cache(maxsize=4096)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = {lam[k] + (length - 1 - k) for k in range(length)}
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beta:
            continue
        height = sum(1 for x in beta if c < x < b)
        total += (-1) ** height * _mn(_beta_to_partition((beta - {b}) | {c}), rest)
    return total


def sn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """
    χ_λ(μ) by the Murnaghan-Nakayama rule on beta-sets.

    Example:
    ```python
    >>> sn_character((2, 1), (3,))
    -1
    >>> sn_character((3, 1), (1, 1, 1, 1))
    3
    ```

    Args:
        lam (Sequence[int]): The irreducible, as an (unpadded) partition.
        mu (Sequence[int]): The cycle type.

    Raises:
        ShapeMismatch: if |λ| != |μ|.
    """
    lam = tuple(int(x) for x in lam)
    mu = tuple(sorted((int(x) for x in mu), reverse=True))
    if not is_partition(lam) or not is_partition(mu):
        raise ValueError(f"expected partitions, got λ={lam}, μ={mu}")
    if sum(lam) != sum(mu):
        raise ShapeMismatch(f"|λ|={sum(lam)} but |μ|={sum(mu)}")
    return _mn(lam, mu)


def rho_character(I: PairSubset, g: PZnElement) -> int:
    """
    ρ_I(g) = (-1)^{|I ∩ support(g)|}.

    Example:
    ```python
    >>> rho_character(I3(), PZnElement.from_pairs(3, [(1, 3)]))
    -1
    ```
    """
    if I.n != g.n:
        raise ValueError(f"pair subset on {I.n} strands, element on {g.n}")
    return -1 if sum(1 for p in g.support() if p in I) % 2 else 1


@dataclass(frozen=True, slots=True)
class CharacterVector:
    """
    A rational class function: one value per conjugacy class.

    Args:
        domain (str): Name of the group, e.g. "Z_4".
        classes (tuple[str, ...]): Class labels (witness words).
        sizes (tuple[int, ...]): Class sizes.
        values (tuple[Fraction, ...]): Character values.
        identity (int): Position of the identity class.
    """
    domain: str
    classes: tuple[str, ...]
    sizes: tuple[int, ...]
    values: tuple[Fraction, ...]
    identity: int = field(default=0)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @property
    def degree(self) -> Fraction:
        return self.values[self.identity]

    def inner_product(self, other: CharacterVector) -> Fraction:
        """⟨χ, χ'⟩ = |G|⁻¹ Σ |C| χ(C) χ'(C); values are real, so no conjugation."""
        if (self.domain, self.sizes) != (other.domain, other.sizes):
            raise ValueError(f"characters of {self.domain} and {other.domain} do not match")
        total = sum((s * a * b for s, a, b in zip(self.sizes, self.values, other.values)),
                    Fraction(0))
        return total / self.order

    def to_dict(self) -> dict:
        return {
            "domain": self.domain,
            "classes": list(self.classes),
            "sizes": list(self.sizes),
            "values": [format_rational(v) for v in self.values],
        }
