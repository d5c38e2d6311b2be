"""Subsets of unordered strand pairs and their symmetric-group orbits"""

from __future__ import annotations

__all__ = [
    "PairSubset",
    "I3",
    "I4",
]

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from level4_braids.utils import Pair, pair


@dataclass(frozen=True, slots=True, init=False, order=True)
class PairSubset:
    """
    Set of unordered pairs {i, j} of [n], stored sorted.

    Example:
    ```python
    >>> I = PairSubset(4, [(2, 3), (1, 3)])
    >>> I.pairs
    ((1, 3), (2, 3))
    >>> I.is_full(3)
    True
    ```

    Args:
        n (int): Strand count.
        pairs (Iterable[tuple[int, int]]): The pairs; order and orientation are ignored.
    """
    n: int = field()
    pairs: tuple[Pair, ...] = field()

    def __init__(self, n: int, pairs: Iterable[Sequence[int]] = ()):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"n must be int, got {type(n).__name__}")
        canon = set()
        for p in pairs:
            if len(p) != 2:
                raise ValueError(f"pairs must have two labels, got {tuple(p)}")
            q = pair(int(p[0]), int(p[1]))
            if q[0] < 1 or q[1] > n:
                raise ValueError(f"pair {q} out of range for n={n}")
            canon.add(q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", tuple(sorted(canon)))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, tuple) or len(p) != 2:
            return False
        return pair(*p) in self.pairs

    def __str__(self) -> str:
        return "{" + ",".join(f"{i}{j}" if self.n < 10 else f"({i},{j})"
                              for i, j in self.pairs) + "}"

    def support(self) -> frozenset[int]:
        """Union of the pairs."""
        return frozenset(x for p in self.pairs for x in p)

    def is_full(self, m: int) -> bool:
        """Whether the pairs cover exactly [m]."""
        return self.support() == frozenset(range(1, m + 1))

    def image(self, perm: Sequence[int]) -> PairSubset:
        """Apply a permutation given as images (π(1), ..., π(n))."""
        return PairSubset(self.n, [(perm[i - 1], perm[j - 1]) for i, j in self.pairs])

    def is_stabilized_by(self, perm: Sequence[int]) -> bool:
        return self.image(perm) == self

    def orbit(self) -> list[PairSubset]:
        """The S_n-orbit, sorted; computed by closure under adjacent transpositions."""
        seen = {self}
        frontier = [self]
        while frontier:
            nxt = []
            for s in frontier:
                for i in range(1, self.n):
                    perm = list(range(1, self.n + 1))
                    perm[i - 1], perm[i] = perm[i], perm[i - 1]
                    t = s.image(perm)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return sorted(seen)

    def embed(self, n: int) -> PairSubset:
        return PairSubset(n, self.pairs)

    def to_dict(self) -> dict:
        return {"n": self.n, "pairs": [list(p) for p in self.pairs]}


def I3(n: int = 3) -> PairSubset:
    """{13, 23}: the star at strand 3 on the first three strands."""
    return PairSubset(n, [(1, 3), (2, 3)])


def I4(n: int = 4) -> PairSubset:
    """{13, 23, 14, 24}: the complete bipartite graph between {1,2} and {3,4}."""
    return PairSubset(n, [(1, 3), (2, 3), (1, 4), (2, 4)])
