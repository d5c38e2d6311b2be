"""Reidemeister-Schreier presentation of the level-4 subgroup PB_n² of PB_n"""

from __future__ import annotations

__all__ = [
    "CosetTable",
    "SubgroupPresentation",
    "subgroup_presentation",
]

import logging
from dataclasses import dataclass, field

from level4_braids.braids import PureBraidWord
from level4_braids.config import Limits, check_bound
from level4_braids.errors import NotInSubgroup
from level4_braids.oracle.presentation import Letter, Presentation, free_reduce, pb_presentation
from level4_braids.utils import Pair, all_pairs, with_progress

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, init=False)
class CosetTable:
    """
    Right cosets of the kernel of PB_n → F_2^{C(n,2)}.

    Cosets are bitmasks over the generators; generator k (0-based) flips bit k,
    so the table is complete and the identity coset is 0. The transversal word
    of a coset is the product of its generators in increasing order, which is
    the lexicographically least word and is closed under prefixes.

    Args:
        rank (int): Number of generators of the ambient group.
    """
    rank: int = field()

    def __init__(self, rank: int):
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise TypeError(f"rank must be int, got {type(rank).__name__}")
        if rank < 0:
            raise ValueError(f"rank must be non-negative, got {rank}")
        object.__setattr__(self, "rank", rank)

    @property
    def index(self) -> int:
        return 1 << self.rank

    def act(self, coset: int, letter: Letter) -> int:
        return coset ^ (1 << (abs(letter) - 1))

    def trace(self, word: tuple[Letter, ...] | list[Letter], start: int = 0) -> int:
        coset = start
        for x in word:
            coset = self.act(coset, x)
        return coset

    def transversal(self, coset: int) -> tuple[Letter, ...]:
        return tuple(k + 1 for k in range(self.rank) if coset >> k & 1)

    def is_tree_edge(self, coset: int, k: int) -> bool:
        """True when t_c·a_k is freely equal to the transversal word of c·a_k."""
        return coset < (1 << k)


@dataclass(frozen=True, slots=True)
class SubgroupPresentation:
    """
    A presentation of PB_n² on the nontrivial Schreier generators
    t_c a_k t_{c a_k}⁻¹, with the map rewriting subgroup words into them.
    """
    n: int
    table: CosetTable
    columns: dict[tuple[int, int], int] = field(repr=False)
    presentation: Presentation = field(repr=False)

    @property
    def pairs(self) -> list[Pair]:
        return all_pairs(self.n)

    def rewrite_letters(self, word: list[Letter] | tuple[Letter, ...], start: int = 0
                        ) -> tuple[int, tuple[Letter, ...]]:
        """Rewrite a word read from coset `start`; returns the end coset and the Schreier word."""
        coset, out = start, []
        for x in word:
            k = abs(x) - 1
            if x > 0:
                col = self.columns.get((coset, k))
                coset ^= 1 << k
                if col is not None:
                    out.append(col + 1)
            else:
                coset ^= 1 << k
                col = self.columns.get((coset, k))
                if col is not None:
                    out.append(-(col + 1))
        return coset, free_reduce(out)

    def letters_of(self, w: PureBraidWord) -> list[Letter]:
        if w.n != self.n:
            raise ValueError(f"word on {w.n} strands, oracle on {self.n}")
        index = {p: k + 1 for k, p in enumerate(self.pairs)}
        return [index[p] * e for p, e in w.unit_letters()]

    def rewrite(self, w: PureBraidWord) -> tuple[Letter, ...]:
        """
        The Schreier word of a pure braid word in the level-4 subgroup.

        Raises:
            NotInSubgroup: if some generator has odd exponent sum in `w`.
        """
        end, out = self.rewrite_letters(self.letters_of(w))
        if end != 0:
            raise NotInSubgroup(f"{w} is not in the level-4 subgroup")
        return out

    def exponents(self, w: PureBraidWord) -> dict[int, int]:
        """Exponent sums of the Schreier generators (0-based columns) in the rewrite of `w`."""
        sums: dict[int, int] = {}
        for x in self.rewrite(w):
            c = abs(x) - 1
            sums[c] = sums.get(c, 0) + (1 if x > 0 else -1)
        return {c: v for c, v in sums.items() if v}

    def to_dict(self) -> dict:
        return {"n": self.n, "index": self.table.index, **self.presentation.to_dict()}


def subgroup_presentation(
    n: int,
    *,
    limits: Limits | None = None,
    progress: bool = False,
    **tqdm_kw,
) -> SubgroupPresentation:
    """
    Reidemeister-Schreier presentation of the kernel of the mod-2 abelianization of PB_n.

    Each relator r of PB_n contributes the rewrite of t_c r t_c⁻¹ for every coset
    c; the transversal parts rewrite to tree edges, so r is read from c.

    Example:
    ```python
    >>> len(subgroup_presentation(3).presentation.generators)
    17
    ```

    Args:
        n (int): Strand count.
        limits (Limits, optional): n may not exceed `limits.oracle`.
        progress (bool): Show a progress bar over cosets. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.

    Raises:
        BoundExceeded: if n is above the oracle bound.
    """
    limits = limits or Limits.from_env()
    check_bound("n", n, limits.oracle)
    ambient = pb_presentation(n, limits=limits)
    table = CosetTable(len(ambient.generators))
    columns: dict[tuple[int, int], int] = {}
    names = []
    for c in range(table.index):
        for k in range(table.rank):
            if not table.is_tree_edge(c, k):
                columns[(c, k)] = len(names)
                names.append(f"s{c}_{k + 1}")
    sub = SubgroupPresentation(n, table, columns, Presentation(names))
    relators = []
    for c in with_progress(range(table.index), progress=progress, total=table.index,
                           desc=f"rewrite n={n}", **tqdm_kw):
        for r in ambient.relators:
            end, word = sub.rewrite_letters(r, start=c)
            if end != c:
                raise AssertionError(f"relator {r} does not close at coset {c}")
            relators.append(word)
    out = SubgroupPresentation(n, table, columns, Presentation(names, relators))
    logger.info("PB_%d²: index %d, %d Schreier generators, %d relators",
                n, table.index, len(names), len(out.presentation.relators))
    return out
