"""The finite quotients Z_n = B_n/B_n[4] and PZ_n = PB_n/B_n[4]"""

from __future__ import annotations

__all__ = [
    "ZnElement",
    "PZnElement",
    "ZnTable",
    "project",
    "pure_project",
    "enumerate_zn",
    "zn_order",
]

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import count
from math import comb, factorial

import numpy as np

from level4_braids.braids.burau import BurauMatrix, apply_sigma_columns, burau_mod
from level4_braids.braids.subsets import PairSubset
from level4_braids.braids.winding import winding_numbers
from level4_braids.braids.words import BraidWord, PureBraidWord
from level4_braids.config import Limits, check_bound
from level4_braids.errors import NotPure
from level4_braids.utils import Pair, all_pairs, pair, with_progress

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, init=False)
class ZnElement:
    """
    Element of Z_n: a Burau matrix mod 4 with its mod-2 permutation.

    Args:
        matrix (BurauMatrix): Burau matrix reduced mod 4.
        perm (Iterable[int] | None): (π(1), ..., π(n)); read off `matrix` when omitted.
    """
    matrix: BurauMatrix = field()
    perm: tuple[int, ...] = field(compare=False)

    def __init__(self, matrix: BurauMatrix, perm: Iterable[int] | None = None):
        if not isinstance(matrix, BurauMatrix):
            raise TypeError(f"matrix must be BurauMatrix, got {type(matrix).__name__}")
        if matrix.modulus != 4:
            raise ValueError(f"Z_n elements live mod 4, got modulus {matrix.modulus}")
        shadow = matrix.permutation()
        if perm is not None:
            perm = tuple(int(x) for x in perm)
            if sorted(perm) != list(range(1, matrix.n + 1)):
                raise ValueError(f"not a permutation of 1..{matrix.n}: {perm}")
            if perm != shadow:
                raise ValueError(f"permutation {perm} disagrees with the mod-2 shadow {shadow}")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "perm", shadow)

    @classmethod
    def from_matrix(cls, matrix: BurauMatrix) -> ZnElement:
        return cls(matrix)

    @property
    def n(self) -> int:
        return self.matrix.n

    def __mul__(self, other: ZnElement) -> ZnElement:
        return ZnElement.from_matrix(self.matrix @ other.matrix)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def key(self) -> bytes:
        return np.array(self.matrix.entries, dtype=np.uint8).tobytes()


@dataclass(frozen=True, slots=True, init=False)
class PZnElement:
    """
    Element of PZ_n ≅ F_2^{C(n,2)}, bits indexed by pairs in lexicographic order.

    Args:
        n (int): Strand count.
        bits (Iterable[int]): C(n,2) bits (0/1).
    """
    n: int = field()
    bits: tuple[int, ...] = field()

    def __init__(self, n: int, bits: Iterable[int]):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"n must be int, got {type(n).__name__}")
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0 or 1, got {bits}")
        if len(bits) != comb(n, 2):
            raise ValueError(f"expected {comb(n, 2)} bits for n={n}, got {len(bits)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def zero(cls, n: int) -> PZnElement:
        return cls(n, [0] * comb(n, 2))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> PZnElement:
        index = {p: k for k, p in enumerate(all_pairs(n))}
        bits = [0] * comb(n, 2)
        for p in pairs:
            bits[index[pair(*p)]] ^= 1
        return cls(n, bits)

    def __add__(self, other: PZnElement) -> PZnElement:
        if self.n != other.n:
            raise ValueError("PZ_n elements for different n")
        return PZnElement(self.n, [a ^ b for a, b in zip(self.bits, other.bits)])

    __mul__ = __add__

    def support(self) -> PairSubset:
        return PairSubset(self.n, [p for p, b in zip(all_pairs(self.n), self.bits) if b])

    def is_identity(self) -> bool:
        return not any(self.bits)


def project(w: BraidWord | PureBraidWord) -> ZnElement:
    """Image of a braid in Z_n."""
    return ZnElement.from_matrix(burau_mod(w, 4))


def pure_project(w: BraidWord | PureBraidWord) -> PZnElement:
    """
    Image of a pure braid in PZ_n: the winding numbers mod 2.

    Raises:
        NotPure: if `w` permutes its strands.
    """
    if isinstance(w, PureBraidWord):
        sums = w.exponent_sums()
        return PZnElement.from_pairs(w.n, [p for p, e in sums.items() if e % 2])
    if not w.is_pure():
        raise NotPure(f"{w} induces the permutation {w.permutation()}")
    xi = winding_numbers(w)
    return PZnElement.from_pairs(w.n, [p for p, v in xi.items() if int(v) % 2])


def zn_order(n: int) -> int:
    """|Z_n| = n! 2^{C(n,2)}."""
    return factorial(n) * 2 ** comb(n, 2)


class ZnTable:
    """
    Enumerated Z_n with BFS witness words over σ_1, ..., σ_{n-1}.

    Elements are indexed in increasing order of their matrix bytes; the
    identity carries the empty word. `right[g, i-1]` is the index of g·σ_i.
    """
    __slots__ = ("n", "matrices", "right", "_parent", "_via", "_index", "_words")

    def __init__(self, n: int, matrices: np.ndarray, right: np.ndarray,
                 parent: np.ndarray, via: np.ndarray):
        self.n = n
        self.matrices = matrices
        self.right = right
        self._parent = parent
        self._via = via
        self._index = {m.tobytes(): k for k, m in enumerate(matrices)}
        self._words: dict[int, BraidWord] = {}

    def __len__(self) -> int:
        return len(self.matrices)

    @property
    def identity(self) -> int:
        return self.index_of(np.eye(self.n, dtype=np.uint8))

    def index_of(self, matrix: np.ndarray | BurauMatrix | ZnElement) -> int:
        if isinstance(matrix, ZnElement):
            matrix = matrix.matrix
        if isinstance(matrix, BurauMatrix):
            matrix = np.array(matrix.entries)
        key = (np.asarray(matrix) % 4).astype(np.uint8).tobytes()
        return self._index[key]

    def element(self, idx: int) -> ZnElement:
        return ZnElement.from_matrix(BurauMatrix.from_array(self.matrices[idx], 4))

    def word(self, idx: int) -> BraidWord:
        """Shortest positive word (in BFS order) representing element `idx`."""
        if idx not in self._words:
            letters = []
            k = idx
            while self._parent[k] >= 0:
                letters.append((int(self._via[k]), 1))
                k = int(self._parent[k])
            self._words[idx] = BraidWord(self.n, reversed(letters))
        return self._words[idx]

    def permutation(self, idx: int) -> tuple[int, ...]:
        return self.element(idx).perm

    def multiply(self, a: int, b: int) -> int:
        prod = self.matrices[a].astype(np.int64) @ self.matrices[b].astype(np.int64)
        return self.index_of(prod)

    def inverse(self, idx: int) -> int:
        return self.index_of(burau_mod(self.word(idx).inverse(), 4))

    def conjugation_by_generators(self) -> np.ndarray:
        """Table c[g, i-1] = index of σ_i g σ_i⁻¹, computed for all g at once."""
        out = np.empty((len(self), self.n - 1), dtype=np.int64)
        for i in range(1, self.n):
            stack = self.matrices.astype(np.int64)
            # left multiplication by B(σ_i) acts on rows i, i+1
            top = stack[:, i - 1, :].copy()
            bottom = stack[:, i, :].copy()
            stack[:, i - 1, :] = 2 * top - bottom
            stack[:, i, :] = top
            apply_sigma_columns(stack, i, -1)
            stack %= 4
            out[:, i - 1] = [self._index[m.astype(np.uint8).tobytes()] for m in stack]
        return out


def enumerate_zn(
    n: int,
    *,
    limits: Limits | None = None,
    progress: bool = False,
    **tqdm_kw,
) -> ZnTable:
    """
    Enumerate Z_n as the image of B_n in GL_n(Z/4) by breadth-first search.

    Example:
    ```python
    >>> len(enumerate_zn(3))
    48
    ```

    Args:
        n (int): Strand count, at least 1.
        limits (Limits, optional): Bounds; defaults to `Limits.from_env()`.
        progress (bool): Show a progress bar over BFS layers. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.

    Raises:
        BoundExceeded: if n or the group order is above the configured limits.
    """
    limits = limits or Limits.from_env()
    check_bound("n", n, limits.enumeration)
    check_bound("|Z_n|", zn_order(n), limits.max_elements)
    if n >= 6:
        logger.warning("enumerating Z_%d holds %d matrices in memory", n, zn_order(n))
    return _enumerate_zn(n, progress, tuple(sorted(tqdm_kw.items())))


@lru_cache(maxsize=8)
def _enumerate_zn(n: int, progress: bool, tqdm_items: tuple) -> ZnTable:
    order = zn_order(n)
    ident = np.eye(n, dtype=np.uint8)
    index = {ident.tobytes(): 0}
    mats = [ident]
    parent = [-1]
    via = [0]
    edges: list[tuple[int, int, int]] = []
    frontier = np.array([ident], dtype=np.int64)
    frontier_ids = [0]
    layers = with_progress(count(), progress=progress, desc=f"Z_{n} layers",
                           **dict(tqdm_items))
    for _ in layers:
        if not frontier_ids:
            break
        next_mats: list[np.ndarray] = []
        next_ids: list[int] = []
        for i in range(1, n):
            stack = frontier.copy()
            apply_sigma_columns(stack, i, 1)
            stack %= 4
            for src, m in zip(frontier_ids, stack.astype(np.uint8)):
                key = m.tobytes()
                dst = index.get(key)
                if dst is None:
                    dst = len(mats)
                    index[key] = dst
                    mats.append(m)
                    parent.append(src)
                    via.append(i)
                    next_mats.append(m)
                    next_ids.append(dst)
                edges.append((src, i, dst))
        frontier = np.array(next_mats, dtype=np.int64).reshape(-1, n, n)
        frontier_ids = next_ids
    if len(mats) != order:
        raise ArithmeticError(f"enumerated {len(mats)} elements of Z_{n}, expected {order}")

    # canonical order by matrix bytes
    keys = [m.tobytes() for m in mats]
    ranked = sorted(range(len(mats)), key=keys.__getitem__)
    new_of = np.empty(len(mats), dtype=np.int64)
    new_of[ranked] = np.arange(len(mats))
    matrices = np.array([mats[k] for k in ranked], dtype=np.uint8).reshape(-1, n, n)
    right = np.empty((len(mats), max(n - 1, 0)), dtype=np.int64)
    for src, i, dst in edges:
        right[new_of[src], i - 1] = new_of[dst]
    parent_arr = np.array([new_of[parent[k]] if parent[k] >= 0 else -1 for k in ranked])
    via_arr = np.array([via[k] for k in ranked])
    logger.debug("enumerated Z_%d: %d elements", n, len(mats))
    return ZnTable(n, matrices, right, parent_arr, via_arr)
