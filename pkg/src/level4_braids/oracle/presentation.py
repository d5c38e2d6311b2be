"""Finite presentations and the standard presentation of the pure braid group"""

from __future__ import annotations

__all__ = [
    "Presentation",
    "free_reduce",
    "pb_presentation",
    "relator_word",
    "relator_failures",
]

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

from level4_braids.braids import PureBraidWord, burau_mod
from level4_braids.config import Limits, check_bound
from level4_braids.errors import ParseError
from level4_braids.utils import FilePath, Pair, all_pairs, resolve_path

logger = logging.getLogger(__name__)

# a relator letter is a signed 1-based generator index
Letter = int


def free_reduce(word: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent x x⁻¹ pairs."""
    out: list[Letter] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True, slots=True, init=False)
class Presentation:
    """
    Generators and freely reduced relators; letters are ±(index + 1).

    The text form has one "gen name" line per generator and one "rel ..." line
    per relator, an inverse written in upper case:
    ```python
    >>> p = Presentation.parse("gen a\\ngen b\\nrel a b A B")
    >>> p.relators
    ((1, 2, -1, -2),)
    ```

    Args:
        generators (Iterable[str]): Lower-case generator names.
        relators (Iterable[Sequence[int]]): Relator words; empty ones are dropped.
    """
    generators: tuple[str, ...] = field()
    relators: tuple[tuple[Letter, ...], ...] = field()

    def __init__(self, generators: Iterable[str], relators: Iterable[Sequence[Letter]] = ()):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, str):
                raise TypeError(f"generator names must be str, got {type(g).__name__}")
            if not g or g != g.lower() or not g[0].isalpha() or " " in g:
                raise ValueError(f"generator names must be lower case words, got {g!r}")
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be distinct")
        rels = []
        for r in relators:
            word = free_reduce(int(x) for x in r)
            if any(x == 0 or abs(x) > len(gens) for x in word):
                raise ValueError(f"relator {r!r} uses an unknown generator")
            if word:
                rels.append(word)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def parse(cls, text: str) -> Presentation:
        """
        Read the line-based text form; blank lines and lines starting with # are skipped.

        Raises:
            ParseError: on unknown keywords or generators.
        """
        gens: list[str] = []
        rel_tokens: list[list[str]] = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, rest = line.partition(" ")
            if key == "gen":
                gens.append(rest.strip())
            elif key == "rel":
                rel_tokens.append(rest.split())
            else:
                raise ParseError(f"line {lineno}: expected 'gen' or 'rel', got {key!r}")
        index = {g: k + 1 for k, g in enumerate(gens)}
        rels = []
        for tokens in rel_tokens:
            word = []
            for tok in tokens:
                k = index.get(tok.lower())
                if k is None:
                    raise ParseError(f"unknown generator {tok!r}")
                word.append(k if tok == tok.lower() else -k)
            rels.append(word)
        try:
            return cls(gens, rels)
        except ValueError as e:
            raise ParseError(str(e)) from e

    @classmethod
    def read(cls, path: FilePath) -> Presentation:
        return cls.parse(resolve_path(path).read_text())

    def format(self) -> str:
        lines = [f"gen {g}" for g in self.generators]
        for r in self.relators:
            lines.append("rel " + " ".join(
                self.generators[x - 1] if x > 0 else self.generators[-x - 1].upper() for x in r
            ))
        return "\n".join(lines) + "\n"

    def write(self, path: FilePath) -> Path:
        path = resolve_path(path)
        path.write_text(self.format())
        return path

    def exponent_rows(self) -> list[dict[int, int]]:
        """Exponent sum of each generator (0-based column) in each relator."""
        rows = []
        for r in self.relators:
            row: dict[int, int] = {}
            for x in r:
                c = abs(x) - 1
                row[c] = row.get(c, 0) + (1 if x > 0 else -1)
            rows.append({c: v for c, v in row.items() if v})
        return rows

    def to_dict(self) -> dict:
        return {"generators": len(self.generators), "relators": len(self.relators)}


def _conjugation_rhs(r: int, s: int, i: int, j: int) -> list[tuple[Pair, int]]:
    """A_rs⁻¹ A_ij A_rs for r < s, i < j and s < j."""
    if s < i or i < r:
        return [((i, j), 1)]
    if s == i:
        return [((r, j), 1), ((i, j), 1), ((r, j), -1)]
    if i == r:
        return [((r, j), 1), ((s, j), 1), ((i, j), 1), ((s, j), -1), ((r, j), -1)]
    return [((r, j), 1), ((s, j), 1), ((r, j), -1), ((s, j), -1), ((i, j), 1),
            ((s, j), 1), ((r, j), 1), ((s, j), -1), ((r, j), -1)]


def pb_presentation(n: int, *, limits: Limits | None = None) -> Presentation:
    """
    The standard presentation of PB_n on the A_ij, one conjugation relator
    A_rs⁻¹ A_ij A_rs (rhs)⁻¹ for each pair of pairs with s < j.

    Example:
    ```python
    >>> [len(pb_presentation(n).relators) for n in (2, 3, 4)]
    [0, 2, 11]
    ```

    Raises:
        BoundExceeded: if n is above the presentation bound.
    """
    limits = limits or Limits.from_env()
    check_bound("n", n, limits.presentation)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    pairs = all_pairs(n)
    index = {p: k + 1 for k, p in enumerate(pairs)}
    relators = []
    for r, s in pairs:
        for i, j in pairs:
            if s >= j:
                continue
            lhs = [-index[(r, s)], index[(i, j)], index[(r, s)]]
            rhs = [index[p] * e for p, e in _conjugation_rhs(r, s, i, j)]
            relators.append(lhs + [-x for x in reversed(rhs)])
    gens = [f"a{i}_{j}" if n > 9 else f"a{i}{j}" for i, j in pairs]
    p = Presentation(gens, relators)
    logger.debug("PB_%d: %d generators, %d relators", n, len(p.generators), len(p.relators))
    return p


def relator_word(relator: Sequence[Letter], n: int) -> PureBraidWord:
    """A relator of `pb_presentation(n)` as a pure braid word."""
    pairs = all_pairs(n)
    return PureBraidWord(n, [(pairs[abs(x) - 1], 1 if x > 0 else -1) for x in relator])


def relator_failures(p: Presentation, n: int, moduli: Sequence[int] = (4, 8)) -> list[int]:
    """Indices of relators of a presentation of PB_n not trivial under Burau mod each modulus."""
    failures = []
    for k, r in enumerate(p.relators):
        w = relator_word(r, n)
        if not all(burau_mod(w, m).is_identity() for m in moduli):
            failures.append(k)
    return failures
