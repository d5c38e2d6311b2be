"""Marked-point labels of the double covers and vectors over label pairs"""

from __future__ import annotations

__all__ = [
    "Label",
    "label",
    "CoverIndex",
    "all_covers",
    "PairVector",
    "subset_symbol",
    "delta",
]

import json
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from level4_braids.errors import ParseError
from level4_braids.utils import format_rational

Rational = Fraction | int

_LABEL = re.compile(r"^(\d+)('?)$")
_COVER = re.compile(r"^\(?(\d+),(\d+|inf|∞)\)?$")


@dataclass(frozen=True, slots=True, order=True)
class Label:
    """A marked point k or k' of a cover; unprimed labels sort first."""
    primed: bool
    index: int

    def prime(self) -> Label:
        return Label(not self.primed, self.index)

    def __str__(self) -> str:
        return f"{self.index}'" if self.primed else str(self.index)


def label(x: Label | int | str) -> Label:
    """
    Coerce 3 or "3" to the label 3 and "3'" to 3'.

    Example:
    ```python
    >>> label("2'")
    Label(primed=True, index=2)
    ```
    """
    if isinstance(x, Label):
        return x
    if isinstance(x, bool):
        raise TypeError("labels cannot be bool")
    if isinstance(x, int):
        return Label(False, x)
    if isinstance(x, str) and (m := _LABEL.match(x.strip())):
        return Label(bool(m.group(2)), int(m.group(1)))
    raise ParseError(f"not a label: {x!r}")


@dataclass(frozen=True, slots=True, init=False)
class CoverIndex:
    """
    The (i,j)-cover of the n-marked disk, with j = None standing for ∞.

    Args:
        n (int): Strand count.
        i (int): First branch index.
        j (int | None): Second branch index, or None for ∞.
    """
    n: int = field()
    i: int = field()
    j: int | None = field()

    def __init__(self, n: int, i: int, j: int | None = None):
        if j is not None and j < i:
            i, j = j, i
        if not 1 <= i <= n or (j is not None and (j > n or j == i)):
            raise ValueError(f"invalid cover ({i},{'inf' if j is None else j}) for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    @classmethod
    def parse(cls, text: str, n: int) -> CoverIndex:
        m = _COVER.match(text.replace(" ", ""))
        if m is None:
            raise ParseError(f"not a cover index: {text!r}")
        j = None if m.group(2) in ("inf", "∞") else int(m.group(2))
        return cls(n, int(m.group(1)), j)

    @property
    def is_infinite(self) -> bool:
        return self.j is None

    @property
    def branch(self) -> frozenset[int]:
        """The finite branch indices."""
        return frozenset({self.i} if self.j is None else {self.i, self.j})

    @property
    def labels(self) -> tuple[Label, ...]:
        """L = [n] ∪ [n]' without the primes of the branch indices."""
        plain = [Label(False, k) for k in range(1, self.n + 1)]
        primed = [Label(True, k) for k in range(1, self.n + 1) if k not in self.branch]
        return (*plain, *primed)

    def position(self, x: int | None) -> float:
        """Position on the line, ∞ after every marked point."""
        return float("inf") if x is None else float(x)

    def sort_key(self) -> tuple:
        return (self.j is not None, self.i, self.j or 0)

    def __str__(self) -> str:
        return f"({self.i},{'inf' if self.j is None else self.j})"


def all_covers(n: int) -> list[CoverIndex]:
    """The (i,∞)-covers followed by the (i,j)-covers, in lexicographic order."""
    return [CoverIndex(n, i) for i in range(1, n + 1)] + [
        CoverIndex(n, i, j) for i, j in combinations(range(1, n + 1), 2)
    ]


def _label_pair(a: Label, b: Label) -> tuple[Label, Label]:
    if a == b:
        raise ValueError(f"a pair needs two different labels, got {a} twice")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, slots=True, init=False)
class PairVector:
    """
    Element of the free abelian group on unordered label pairs (kℓ), extended to Q.

    `cover` is None for the abelianization of the pure braid group itself.

    Args:
        n (int): Strand count.
        cover (CoverIndex | None): The cover whose labels are used.
        entries (Mapping[tuple[Label, Label], Fraction | int]): Coefficients.
    """
    n: int = field()
    cover: CoverIndex | None = field()
    entries: tuple[tuple[tuple[Label, Label], Fraction], ...] = field()

    def __init__(self, n: int, cover: CoverIndex | None = None,
                 entries: Mapping[tuple[Label, Label], Rational] | None = None):
        if cover is not None and cover.n != n:
            raise ValueError(f"cover {cover} is for n={cover.n}, not {n}")
        valid = set(cover.labels) if cover is not None else {Label(False, k) for k in range(1, n + 1)}
        acc: dict[tuple[Label, Label], Fraction] = {}
        for (a, b), c in (entries or {}).items():
            key = _label_pair(label(a), label(b))
            if not set(key) <= valid:
                raise ValueError(f"pair ({key[0]}{key[1]}) is not valid for cover {cover}")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "cover", cover)
        object.__setattr__(self, "entries", tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def zero(cls, n: int, cover: CoverIndex | None = None) -> PairVector:
        return cls(n, cover)

    def as_dict(self) -> dict[tuple[Label, Label], Fraction]:
        return dict(self.entries)

    def __getitem__(self, key: tuple[Label | int | str, Label | int | str]) -> Fraction:
        return self.as_dict().get(_label_pair(label(key[0]), label(key[1])), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def _check(self, other: PairVector) -> None:
        if not isinstance(other, PairVector):
            raise TypeError(f"expected PairVector, got {type(other).__name__}")
        if (other.n, other.cover) != (self.n, self.cover):
            raise ValueError("pair vectors over different covers")

    def __add__(self, other: PairVector) -> PairVector:
        self._check(other)
        acc = self.as_dict()
        for k, v in other.entries:
            acc[k] = acc.get(k, Fraction(0)) + v
        return PairVector(self.n, self.cover, acc)

    def __neg__(self) -> PairVector:
        return self.scale(-1)

    def __sub__(self, other: PairVector) -> PairVector:
        return self + (-other)

    def scale(self, c: Rational) -> PairVector:
        return PairVector(self.n, self.cover, {k: Fraction(c) * v for k, v in self.entries})

    def __mul__(self, c: Rational) -> PairVector:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def permute(self, perm: Mapping[Label, Label]) -> PairVector:
        """Relabel by `perm`; labels missing from the map are fixed."""
        return PairVector(self.n, self.cover, {
            (perm.get(a, a), perm.get(b, b)): v for (a, b), v in self.entries
        })

    def coordinates(self) -> list[Fraction]:
        """Dense coordinates over all label pairs of the cover in sorted order."""
        labels = (self.cover.labels if self.cover is not None
                  else tuple(Label(False, k) for k in range(1, self.n + 1)))
        d = self.as_dict()
        return [d.get(_label_pair(a, b), Fraction(0)) for a, b in combinations(sorted(labels), 2)]

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        parts = []
        for k, ((a, b), v) in enumerate(self.entries):
            mag = abs(v)
            body = f"({a}{b})" if mag == 1 else f"{format_rational(mag)}({a}{b})"
            if k == 0:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if v > 0 else '-'} {body}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "cover": "base" if self.cover is None else str(self.cover),
            "entries": {f"({a},{b})": format_rational(v) for (a, b), v in self.entries},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def subset_symbol(labels: Iterable[Label | int | str], n: int,
                  cover: CoverIndex | None = None) -> PairVector:
    """
    (A) = Σ_{p<q} (a_p a_q); empty and singleton sets give 0.

    Example:
    ```python
    >>> str(subset_symbol([1, 2, 3], n=3))
    '(12) + (13) + (23)'
    ```
    """
    members = sorted({label(x) for x in labels})
    return PairVector(n, cover, {(a, b): 1 for a, b in combinations(members, 2)})


def delta(i: int, j: int, n: int, cover: CoverIndex) -> PairVector:
    """δ_ij = (ij) + (i'j') - (ij') - (i'j)."""
    a, b = Label(False, i), Label(False, j)
    return PairVector(n, cover, {
        (a, b): 1, (a.prime(), b.prime()): 1, (a, b.prime()): -1, (a.prime(), b): -1,
    })
