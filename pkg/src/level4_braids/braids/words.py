"""Braid words over half-twists and pure braid words over Artin generators"""

from __future__ import annotations

__all__ = [
    "BraidWord",
    "PureBraidWord",
    "artin_generator",
    "half_twist",
    "full_twist",
    "permutation_braid",
    "commutator",
    "conjugate",
    "random_braid_word",
    "random_pure_word",
    "random_level4_word",
]

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TypeVar

import numpy as np

from level4_braids.errors import ParseError
from level4_braids.utils import Pair, all_pairs, pair

Letter = tuple[int, int]
PureLetter = tuple[Pair, int]

_SIGMA_TOKEN = re.compile(r"^([sS])(\d+)$")
_ARTIN_TOKEN = re.compile(r"^A\((\d+),(\d+)\)(?:\^(-?\d+))?$")


@dataclass(frozen=True, slots=True, init=False)
class BraidWord:
    """
    Word in the half-twists σ_1, ..., σ_{n-1}, composed right to left.

    Letters are `(i, ±1)`; the product `u * v` concatenates letters, so
    `burau_mod(u * v) == burau_mod(u) @ burau_mod(v)`.

    Example:
    ```python
    >>> w = BraidWord(3, [(1, 1), (2, -1)])
    >>> str(w)
    's1 S2'
    >>> BraidWord.parse("s1 s1", n=2).permutation()
    (1, 2)
    ```

    Args:
        n (int): Number of strands, at least 1.
        letters (Iterable[tuple[int, int]]): Generator index and sign pairs.
    """
    n: int = field()
    letters: tuple[Letter, ...] = field()

    def __init__(self, n: int, letters: Iterable[Letter] = ()):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"n must be int, got {type(n).__name__}")
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        checked: list[Letter] = []
        for letter in letters:
            try:
                i, s = letter
            except (TypeError, ValueError) as e:
                raise TypeError(f"letters must be (index, sign) pairs, got {letter!r}") from e
            i, s = int(i), int(s)
            if not 1 <= i <= n - 1:
                raise ValueError(f"generator index {i} out of range for n={n}")
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
            checked.append((i, s))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", tuple(checked))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n)

    @classmethod
    def sigma(cls, i: int, n: int, sign: int = 1) -> BraidWord:
        return cls(n, [(i, sign)])

    @classmethod
    def parse(cls, text: str, n: int) -> BraidWord:
        """Parse "s1 S2 s1" (capital = inverse); "e" or "" is the identity."""
        tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
        if tokens in ([], ["e"]):
            return cls(n)
        letters: list[Letter] = []
        for tok in tokens:
            m = _SIGMA_TOKEN.match(tok)
            if m is None:
                raise ParseError(f"bad braid letter {tok!r} in {text!r}")
            letters.append((int(m.group(2)), 1 if m.group(1) == "s" else -1))
        try:
            return cls(n, letters)
        except ValueError as e:
            raise ParseError(str(e)) from e

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"{'s' if s > 0 else 'S'}{i}" for i, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if not isinstance(other, BraidWord):
            return NotImplemented
        _check_same_n(self.n, other.n)
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, [(i, -s) for i, s in reversed(self.letters)])

    def power(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def permutation(self) -> tuple[int, ...]:
        """Images (π(1), ..., π(n)): strand starting at c ends at π(c)."""
        f = list(range(self.n))
        for i, _ in self.letters:
            f[i - 1], f[i] = f[i], f[i - 1]
        return tuple(x + 1 for x in f)

    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(1, self.n + 1))

    def embed(self, n: int) -> BraidWord:
        """Same letters read on `n >= self.n` strands."""
        if n < self.n:
            raise ValueError(f"cannot embed {self.n} strands into {n}")
        return BraidWord(n, self.letters)


@dataclass(frozen=True, slots=True, init=False)
class PureBraidWord:
    """
    Word in the Artin generators A_ij (i < j) with integer exponents.

    Example:
    ```python
    >>> w = PureBraidWord.parse("A(1,2)^2 A(1,3)^-1", n=3)
    >>> str(w)
    'A(1,2)^2 A(1,3)^-1'
    ```

    Args:
        n (int): Number of strands, at least 2 unless the word is empty.
        letters (Iterable[tuple[tuple[int, int], int]]): Pair and exponent.
    """
    n: int = field()
    letters: tuple[PureLetter, ...] = field()

    def __init__(self, n: int, letters: Iterable[PureLetter] = ()):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"n must be int, got {type(n).__name__}")
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        checked: list[PureLetter] = []
        for letter in letters:
            try:
                (i, j), e = letter
            except (TypeError, ValueError) as err:
                raise TypeError(f"letters must be ((i, j), exponent), got {letter!r}") from err
            p = pair(int(i), int(j))
            if not (1 <= p[0] and p[1] <= n):
                raise ValueError(f"pair {p} out of range for n={n}")
            e = int(e)
            if e != 0:
                checked.append((p, e))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", tuple(checked))

    @classmethod
    def generator(cls, i: int, j: int, n: int, exponent: int = 1) -> PureBraidWord:
        return cls(n, [((i, j), exponent)])

    @classmethod
    def parse(cls, text: str, n: int) -> PureBraidWord:
        """Parse "A(1,2)^k A(1,3)" tokens; "e" or "" is the identity."""
        tokens = [t for t in re.split(r"[\s*]+", text.strip().replace(", ", ",")) if t]
        if tokens in ([], ["e"]):
            return cls(n)
        letters: list[PureLetter] = []
        for tok in tokens:
            m = _ARTIN_TOKEN.match(tok)
            if m is None:
                raise ParseError(f"bad pure braid letter {tok!r} in {text!r}")
            e = int(m.group(3)) if m.group(3) is not None else 1
            letters.append(((int(m.group(1)), int(m.group(2))), e))
        try:
            return cls(n, letters)
        except ValueError as e:
            raise ParseError(str(e)) from e

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(
            f"A({i},{j})" if e == 1 else f"A({i},{j})^{e}" for (i, j), e in self.letters
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: PureBraidWord) -> PureBraidWord:
        if not isinstance(other, PureBraidWord):
            return NotImplemented
        _check_same_n(self.n, other.n)
        return PureBraidWord(self.n, self.letters + other.letters).freely_reduced()

    def inverse(self) -> PureBraidWord:
        return PureBraidWord(self.n, [(p, -e) for p, e in reversed(self.letters)])

    def power(self, k: int) -> PureBraidWord:
        base = self if k >= 0 else self.inverse()
        return PureBraidWord(self.n, base.letters * abs(k)).freely_reduced()

    def freely_reduced(self) -> PureBraidWord:
        """Merge adjacent letters on the same generator."""
        out: list[PureLetter] = []
        for p, e in self.letters:
            if out and out[-1][0] == p:
                total = out[-1][1] + e
                out.pop()
                if total:
                    out.append((p, total))
            else:
                out.append((p, e))
        return PureBraidWord(self.n, out)

    def exponent_sums(self) -> dict[Pair, int]:
        sums: dict[Pair, int] = {}
        for p, e in self.letters:
            sums[p] = sums.get(p, 0) + e
        return sums

    def unit_letters(self) -> list[tuple[Pair, int]]:
        """The word as a sequence of A_p^{±1}."""
        return [(p, 1 if e > 0 else -1) for p, e in self.letters for _ in range(abs(e))]

    def to_braid_word(self) -> BraidWord:
        letters: list[Letter] = []
        for (i, j), e in self.letters:
            block = artin_generator(i, j, self.n)
            if e < 0:
                block = block.inverse()
            letters.extend(block.letters * abs(e))
        return BraidWord(self.n, letters)

    def embed(self, n: int) -> PureBraidWord:
        if n < self.n:
            raise ValueError(f"cannot embed {self.n} strands into {n}")
        return PureBraidWord(n, self.letters)


W = TypeVar("W", BraidWord, PureBraidWord)


def _check_same_n(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"strand counts differ: {a} != {b}")


def half_twist(i: int, j: int, n: int) -> BraidWord:
    """σ_ij = σ_{j-1}⋯σ_{i+1} σ_i σ_{i+1}^{-1}⋯σ_{j-1}^{-1}."""
    i, j = pair(i, j)
    outer = [(k, 1) for k in range(j - 1, i, -1)]
    inner = [(k, -1) for k in range(i + 1, j)]
    return BraidWord(n, outer + [(i, 1)] + inner)


def artin_generator(i: int, j: int, n: int) -> BraidWord:
    """A_ij = σ_ij², the twist about a curve around strands i and j."""
    i, j = pair(i, j)
    outer = [(k, 1) for k in range(j - 1, i, -1)]
    inner = [(k, -1) for k in range(i + 1, j)]
    return BraidWord(n, outer + [(i, 1), (i, 1)] + inner)


def full_twist(n: int) -> PureBraidWord:
    """Δ² as the product over j of A_1j A_2j ⋯ A_{j-1,j}; central in B_n."""
    return PureBraidWord(n, [((i, j), 1) for j in range(2, n + 1) for i in range(1, j)])


def permutation_braid(perm: Sequence[int]) -> BraidWord:
    """
    Positive braid inducing the permutation `perm` (1-based images).

    Args:
        perm (Sequence[int]): π(1), ..., π(n).
    """
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(perm)}")
    a = list(perm)
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                swaps.append(i + 1)
                changed = True
    return BraidWord(n, [(i, 1) for i in reversed(swaps)])


def commutator(x: W, y: W) -> W:
    """[x, y] = x y x⁻¹ y⁻¹."""
    return x * y * x.inverse() * y.inverse()


def conjugate(g: W, w: W) -> W:
    """g w g⁻¹."""
    return g * w * g.inverse()


def random_braid_word(n: int, length: int, rng: np.random.Generator) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    idx = rng.integers(1, n, size=length)
    signs = rng.choice((-1, 1), size=length)
    return BraidWord(n, zip(idx.tolist(), signs.tolist()))


def random_pure_word(
    n: int, length: int, rng: np.random.Generator, *, max_exponent: int = 1
) -> PureBraidWord:
    pairs = all_pairs(n)
    if not pairs:
        return PureBraidWord(n)
    picks = rng.integers(0, len(pairs), size=length)
    exps = rng.integers(1, max_exponent + 1, size=length) * rng.choice((-1, 1), size=length)
    return PureBraidWord(n, [(pairs[p], int(e)) for p, e in zip(picks.tolist(), exps.tolist())])


def random_level4_word(
    n: int, rng: np.random.Generator, *, factors: int = 3, conjugator_length: int = 4
) -> BraidWord:
    """Product of random conjugates g A_p^{±2} g⁻¹, an element of B_n[4]."""
    word = BraidWord(n)
    pairs = all_pairs(n)
    if not pairs:
        return word
    for _ in range(factors):
        g = random_braid_word(n, conjugator_length, rng)
        p = pairs[int(rng.integers(0, len(pairs)))]
        sq = PureBraidWord(n, [(p, 2 * int(rng.choice((-1, 1))))]).to_braid_word()
        word = word * conjugate(g, sq)
    return word
