"""Integral Burau representation at t = -1 and its reductions mod m"""

from __future__ import annotations

__all__ = [
    "BurauMatrix",
    "burau_mod",
    "level_membership",
    "apply_sigma_columns",
]

from dataclasses import dataclass, field

import numpy as np

from level4_braids.braids.words import BraidWord, PureBraidWord


@dataclass(frozen=True, slots=True, init=False)
class BurauMatrix:
    """
    Image of a braid under the unreduced Burau representation at t = -1,
    with entries reduced mod `modulus` (0 keeps integers).

    Args:
        n (int): Matrix size (strand count).
        modulus (int): Modulus m >= 0.
        entries (tuple[tuple[int, ...], ...]): Row-major entries.
    """
    n: int = field()
    modulus: int = field()
    entries: tuple[tuple[int, ...], ...] = field()

    def __init__(self, n: int, modulus: int, entries):
        if modulus < 0:
            raise ValueError(f"modulus must be >= 0, got {modulus}")
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"entries must be {n}x{n}")
        if modulus:
            rows = tuple(tuple(x % modulus for x in r) for r in rows)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int, modulus: int) -> BurauMatrix:
        return cls(n, modulus, np.eye(n, dtype=np.int64).tolist())

    @classmethod
    def from_array(cls, arr: np.ndarray, modulus: int) -> BurauMatrix:
        return cls(arr.shape[0], modulus, arr.tolist())

    def to_array(self) -> np.ndarray:
        dtype = np.int64 if self.modulus else object
        return np.array(self.entries, dtype=dtype)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        if not isinstance(other, BurauMatrix):
            return NotImplemented
        if (self.n, self.modulus) != (other.n, other.modulus):
            raise ValueError("Burau matrices of different size or modulus")
        prod = self.to_array() @ other.to_array()
        return BurauMatrix.from_array(prod, self.modulus)

    def reduce(self, modulus: int) -> BurauMatrix:
        """Reduce to a modulus dividing the current one (any modulus from 0)."""
        if self.modulus and (modulus == 0 or self.modulus % modulus):
            raise ValueError(f"cannot reduce mod {self.modulus} entries to mod {modulus}")
        return BurauMatrix(self.n, modulus, self.entries)

    def is_identity(self) -> bool:
        return self == BurauMatrix.identity(self.n, self.modulus)

    def permutation(self) -> tuple[int, ...]:
        """Permutation read off the mod-2 shadow, as (π(1), ..., π(n))."""
        shadow = self.reduce(2) if self.modulus != 2 else self
        images = []
        for c in range(self.n):
            col = [shadow.entries[r][c] for r in range(self.n)]
            if sum(col) != 1:
                raise ValueError("mod-2 shadow is not a permutation matrix")
            images.append(col.index(1) + 1)
        return tuple(images)


def apply_sigma_columns(m: np.ndarray, i: int, sign: int) -> None:
    """
    In place M <- M·B(σ_i^sign) on the last two axes, for one matrix or a stack.

    B(σ_i) has block [[2, -1], [1, 0]] at rows/columns (i, i+1).
    """
    c = i - 1
    left = m[..., :, c].copy()
    right = m[..., :, c + 1].copy()
    if sign > 0:
        m[..., :, c] = 2 * left + right
        m[..., :, c + 1] = -left
    else:
        m[..., :, c] = -right
        m[..., :, c + 1] = left + 2 * right


def burau_mod(w: BraidWord | PureBraidWord, m: int) -> BurauMatrix:
    """
    Burau matrix of `w` at t = -1 reduced mod `m` (m = 0 keeps integers).

    Example:
    ```python
    >>> burau_mod(BraidWord.sigma(1, 2), 4).entries
    ((2, 3), (1, 0))
    ```

    Args:
        w (BraidWord | PureBraidWord): The braid.
        m (int): Modulus, at least 0.
    """
    if m < 0:
        raise ValueError(f"modulus must be >= 0, got {m}")
    if isinstance(w, PureBraidWord):
        w = w.to_braid_word()
    mat = np.eye(w.n, dtype=np.int64 if m else object)
    for i, s in w.letters:
        apply_sigma_columns(mat, i, s)
        if m:
            mat %= m
    return BurauMatrix.from_array(mat, m)


def level_membership(w: BraidWord | PureBraidWord, m: int) -> bool:
    """True iff `w` lies in the level-m subgroup B_n[m]."""
    if m < 1:
        raise ValueError(f"level must be at least 1, got {m}")
    return burau_mod(w, m).is_identity()
