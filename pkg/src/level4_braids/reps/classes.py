"""Conjugacy classes of Z_n and characters of modules on them"""

from __future__ import annotations

__all__ = [
    "ConjugacyClasses",
    "conjugacy_classes",
    "zn_character",
]

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from level4_braids.braids import ZnTable
from level4_braids.reps.characters import CharacterVector
from level4_braids.reps.modules import Representation
from level4_braids.utils import with_progress

logger = logging.getLogger(__name__)


class ConjugacyClasses:
    """
    Partition of an enumerated Z_n into conjugacy classes.

    Each class is represented by a member with a shortest witness word.
    `class_of[g]` is the class number of element g.
    """
    __slots__ = ("table", "class_of", "representatives", "sizes")

    def __init__(self, table: ZnTable, class_of: np.ndarray,
                 representatives: Sequence[int], sizes: Sequence[int]):
        self.table = table
        self.class_of = class_of
        self.representatives = list(representatives)
        self.sizes = list(sizes)

    def __len__(self) -> int:
        return len(self.representatives)

    @property
    def identity_class(self) -> int:
        return int(self.class_of[self.table.identity])

    def character(self, values: Sequence[Fraction]) -> CharacterVector:
        if len(values) != len(self):
            raise ValueError(f"expected {len(self)} class values, got {len(values)}")
        return CharacterVector(
            domain=f"Z_{self.table.n}",
            classes=tuple(str(self.table.word(r)) for r in self.representatives),
            sizes=tuple(self.sizes),
            values=tuple(Fraction(v) for v in values),
            identity=self.identity_class,
        )


def conjugacy_classes(table: ZnTable, *, progress: bool = False, **tqdm_kw) -> ConjugacyClasses:
    """
    Orbits of Z_n under conjugation by σ_1, ..., σ_{n-1}.

    Classes are numbered in order of their smallest element index.

    Example:
    ```python
    >>> len(conjugacy_classes(enumerate_zn(2)))
    4
    ```

    Args:
        table (ZnTable): The enumerated group.
        progress (bool): Show a progress bar over elements. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.
    """
    size = len(table)
    conj = table.conjugation_by_generators() if table.n > 1 else np.empty((size, 0), dtype=np.int64)
    class_of = np.full(size, -1, dtype=np.int64)
    members: list[list[int]] = []
    for g in with_progress(range(size), progress=progress, total=size,
                           desc=f"classes of Z_{table.n}", **tqdm_kw):
        if class_of[g] >= 0:
            continue
        label = len(members)
        class_of[g] = label
        orbit = [g]
        stack = [g]
        while stack:
            x = stack.pop()
            for y in conj[x]:
                y = int(y)
                if class_of[y] < 0:
                    class_of[y] = label
                    orbit.append(y)
                    stack.append(y)
        members.append(orbit)
    reps = [min(orbit, key=lambda g: (len(table.word(g)), g)) for orbit in members]
    logger.debug("Z_%d has %d conjugacy classes", table.n, len(members))
    return ConjugacyClasses(table, class_of, reps, [len(orbit) for orbit in members])


def zn_character(
    module: Representation,
    table: ZnTable,
    classes: ConjugacyClasses | None = None,
) -> CharacterVector:
    """Traces of `module` at the class representatives, evaluated along witness words."""
    if module.n != table.n:
        raise ValueError(f"module on {module.n} strands, group Z_{table.n}")
    classes = classes or conjugacy_classes(table)
    return classes.character([module.word_trace(table.word(r)) for r in classes.representatives])
