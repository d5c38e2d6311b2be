"""The basis S = S1 ∪ S2 ∪ S3 of H_1(B_n[4]; Q)"""

from __future__ import annotations

__all__ = [
    "BasisKind",
    "BasisSymbol",
    "dim_h1",
    "enumerate_basis",
    "basis_index",
    "s2_symbol",
    "s3_symbol",
]

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb

from level4_braids.errors import ParseError
from level4_braids.utils import Pair, pair

_SYMBOL = re.compile(r"^((?:T\(\d+,\d+\))*)\*?t\((\d+),(\d+)\)$")
_TWIST = re.compile(r"T\((\d+),(\d+)\)")


class BasisKind(str, Enum):
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"


_KIND_RANK = {BasisKind.S1: 0, BasisKind.S2: 1, BasisKind.S3: 2}


@dataclass(frozen=True, slots=True, init=False)
class BasisSymbol:
    """
    A basis element: twists T_p (written left to right) applied to τ_ij.

    Build them with `tau`, `s2` and `s3`:
    ```python
    >>> str(BasisSymbol.s2(1, 2, 3, variant=0))
    'T(1,3)*t(1,2)'
    >>> BasisSymbol.parse("T(1,4)T(2,3)*t(1,2)").kind
    <BasisKind.S3: 'S3'>
    ```

    Args:
        kind (BasisKind): S1, S2 or S3.
        indices (tuple[int, ...]): The defining increasing tuple (i,j), (i,j,k) or (i,j,k,l).
        variant (int): Which of the three symbols of a triple or quadruple. Defaults to 0.
    """
    kind: BasisKind = field()
    indices: tuple[int, ...] = field()
    variant: int = field()
    prefix: tuple[Pair, ...] = field(compare=False, repr=False)
    target: Pair = field(compare=False, repr=False)

    def __init__(self, kind: BasisKind | str, indices: tuple[int, ...], variant: int = 0):
        if isinstance(kind, str):
            try:
                kind = BasisKind(kind.upper())
            except ValueError as e:
                raise ValueError(f"kind must be S1, S2 or S3, got {kind!r}") from e
        elif not isinstance(kind, BasisKind):
            raise TypeError(f"kind must be BasisKind or str, got {type(kind).__name__}")
        indices = tuple(int(x) for x in indices)
        expected = {BasisKind.S1: 2, BasisKind.S2: 3, BasisKind.S3: 4}[kind]
        if len(indices) != expected or any(a >= b for a, b in zip(indices, indices[1:])):
            raise ValueError(f"{kind.value} needs {expected} increasing indices, got {indices}")
        if indices[0] < 1:
            raise ValueError(f"indices must be positive, got {indices}")
        if kind is BasisKind.S1:
            variant = 0
        elif variant not in (0, 1, 2):
            raise ValueError(f"variant must be 0, 1 or 2, got {variant}")
        prefix, target = _defining_word(kind, indices, variant)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "variant", variant)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "target", target)

    @classmethod
    def tau(cls, i: int, j: int) -> BasisSymbol:
        return cls(BasisKind.S1, pair(i, j))

    @classmethod
    def s2(cls, i: int, j: int, k: int, variant: int) -> BasisSymbol:
        return cls(BasisKind.S2, (i, j, k), variant)

    @classmethod
    def s3(cls, i: int, j: int, k: int, l: int, variant: int) -> BasisSymbol:
        return cls(BasisKind.S3, (i, j, k, l), variant)

    @classmethod
    def parse(cls, text: str) -> BasisSymbol:
        m = _SYMBOL.match(text.replace(" ", ""))
        if m is None:
            raise ParseError(f"not a basis symbol: {text!r}")
        target = pair(int(m.group(2)), int(m.group(3)))
        twists = tuple(pair(int(a), int(b)) for a, b in _TWIST.findall(m.group(1)))
        for sym in _candidates(target, twists):
            if sorted(sym.prefix) == sorted(twists) and sym.target == target:
                return sym
        raise ParseError(f"{text!r} is not one of the basis symbols")

    @property
    def extras(self) -> frozenset[int]:
        """Indices outside the target touched by the prefix."""
        return frozenset(x for p in self.prefix for x in p if x not in self.target)

    @property
    def max_index(self) -> int:
        return self.indices[-1]

    def sort_key(self) -> tuple:
        return (_KIND_RANK[self.kind], self.indices, self.variant)

    def __lt__(self, other: BasisSymbol) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        twists = "".join(f"T({a},{b})" for a, b in self.prefix)
        tau = f"t({self.target[0]},{self.target[1]})"
        return f"{twists}*{tau}" if twists else tau


def _defining_word(kind: BasisKind, idx: tuple[int, ...], variant: int) -> tuple[tuple[Pair, ...], Pair]:
    if kind is BasisKind.S1:
        return (), (idx[0], idx[1])
    if kind is BasisKind.S2:
        i, j, k = idx
        return [
            (((i, k),), (i, j)),
            (((j, k),), (i, k)),
            (((i, j),), (j, k)),
        ][variant]
    i, j, k, l = idx
    return [
        (((i, l), (j, k)), (i, j)),
        (((i, j), (k, l)), (i, k)),
        (((i, k), (j, l)), (i, l)),
    ][variant]


def _candidates(target: Pair, twists: tuple[Pair, ...]) -> list[BasisSymbol]:
    labels = sorted(set(target).union(*twists)) if twists else list(target)
    if len(labels) == 2:
        return [BasisSymbol.tau(*labels)]
    if len(labels) == 3:
        return [BasisSymbol.s2(*labels, variant=v) for v in range(3)]
    if len(labels) == 4:
        return [BasisSymbol.s3(*labels, variant=v) for v in range(3)]
    return []


def dim_h1(n: int) -> int:
    """
    dim H_1(B_n[4]; Q) = 3C(n,4) + 3C(n,3) + C(n,2).

    Example:
    ```python
    >>> [dim_h1(n) for n in (2, 3, 4, 5)]
    [1, 6, 21, 55]
    ```
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return 3 * comb(n, 4) + 3 * comb(n, 3) + comb(n, 2)


@lru_cache(maxsize=32)
def enumerate_basis(n: int) -> tuple[BasisSymbol, ...]:
    """S1 in lexicographic order, then S2 by (i,j,k,variant), then S3."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    labels = range(1, n + 1)
    out = [BasisSymbol.tau(i, j) for i, j in combinations(labels, 2)]
    out += [BasisSymbol.s2(*t, variant=v) for t in combinations(labels, 3) for v in range(3)]
    out += [BasisSymbol.s3(*q, variant=v) for q in combinations(labels, 4) for v in range(3)]
    return tuple(out)


@lru_cache(maxsize=32)
def basis_index(n: int) -> dict[BasisSymbol, int]:
    return {sym: k for k, sym in enumerate(enumerate_basis(n))}


def s2_symbol(target: Pair, x: int) -> BasisSymbol:
    """The S2 symbol equal to u_x τ_target (u_x the twist joining x to the target)."""
    p, q, r = sorted((*target, x))
    variant = {(p, q): 0, (p, r): 1, (q, r): 2}[pair(*target)]
    return BasisSymbol.s2(p, q, r, variant)


def s3_symbol(target: Pair, extras: tuple[int, int]) -> BasisSymbol:
    """The S3 symbol u_c u_d τ_target; the target must contain the smallest label."""
    p, q, r, s = sorted((*target, *extras))
    variant = {(p, q): 0, (p, r): 1, (p, s): 2}.get(pair(*target))
    if variant is None:
        raise ValueError(f"target {target} does not contain the smallest label {p}")
    return BasisSymbol.s3(p, q, r, s, variant)
