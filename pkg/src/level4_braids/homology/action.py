"""The conjugation action of B_n on H_1(B_n[4]; Q)"""

from __future__ import annotations

__all__ = [
    "GeneratorKind",
    "Generator",
    "as_generators",
    "act",
    "act_symbol",
    "generator_matrix",
    "word_matrix",
]

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from sympy.polys.matrices import DomainMatrix

from level4_braids.braids import BraidWord, PureBraidWord, twist_conjugate
from level4_braids.errors import ParseError
from level4_braids.homology.basis import BasisSymbol, basis_index, enumerate_basis
from level4_braids.homology.expressions import Factor
from level4_braids.homology.reduce import reduce_polynomials
from level4_braids.homology.ring import prefix_polynomial
from level4_braids.homology.vectors import H1Vector
from level4_braids.utils import Pair, pair
from level4_braids.utils.linalg import identity_matrix, sparse_matrix

logger = logging.getLogger(__name__)

_SIGMA = re.compile(r"^([sS])(\d+)$")
_TWIST = re.compile(r"^[TA]\((\d+),(\d+)\)$")


class GeneratorKind(str, Enum):
    SIGMA = "sigma"
    TWIST = "twist"


@dataclass(frozen=True, slots=True, init=False)
class Generator:
    """
    A half-twist σ_k^{±1} or an Artin generator T_p acting on H_1.

    Example:
    ```python
    >>> Generator.parse("S2")
    Generator(kind=<GeneratorKind.SIGMA: 'sigma'>, index=2, sign=-1, pair=None)
    >>> str(Generator.twist(1, 3))
    'T(1,3)'
    ```
    """
    kind: GeneratorKind = field()
    index: int = field()
    sign: int = field()
    pair: Pair | None = field()

    def __init__(self, kind: GeneratorKind | str, index: int = 0, sign: int = 1,
                 pair: Pair | None = None):
        kind = GeneratorKind(kind)
        if kind is GeneratorKind.SIGMA:
            if index < 1:
                raise ValueError(f"sigma index must be positive, got {index}")
            if sign not in (1, -1):
                raise ValueError(f"sign must be 1 or -1, got {sign}")
            pair = None
        else:
            if pair is None or len(pair) != 2 or pair[0] == pair[1]:
                raise ValueError(f"twist needs two distinct labels, got {pair}")
            pair = tuple(sorted(int(x) for x in pair))
            index, sign = 0, 1
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "sign", sign)
        object.__setattr__(self, "pair", pair)

    @classmethod
    def sigma(cls, k: int, sign: int = 1) -> Generator:
        return cls(GeneratorKind.SIGMA, k, sign)

    @classmethod
    def twist(cls, i: int, j: int) -> Generator:
        return cls(GeneratorKind.TWIST, pair=(i, j))

    @classmethod
    def parse(cls, text: str) -> Generator:
        """Parse "s1", "S1" (σ_1⁻¹), "T(1,3)" or "A(1,3)"."""
        text = text.strip()
        if m := _SIGMA.match(text):
            return cls.sigma(int(m.group(2)), 1 if m.group(1) == "s" else -1)
        if m := _TWIST.match(text):
            return cls.twist(int(m.group(1)), int(m.group(2)))
        raise ParseError(f"not a generator: {text!r}")

    @property
    def max_index(self) -> int:
        return self.index + 1 if self.kind is GeneratorKind.SIGMA else self.pair[1]

    def __str__(self) -> str:
        if self.kind is GeneratorKind.TWIST:
            return f"T({self.pair[0]},{self.pair[1]})"
        return f"{'s' if self.sign > 0 else 'S'}{self.index}"


def as_generators(g: Generator | str | BraidWord | PureBraidWord) -> list[Generator]:
    """The generators of `g` in left-to-right order; even powers of A_p are dropped."""
    if isinstance(g, Generator):
        return [g]
    if isinstance(g, str):
        return [Generator.parse(g)]
    if isinstance(g, BraidWord):
        return [Generator.sigma(k, s) for k, s in g.letters]
    if isinstance(g, PureBraidWord):
        return [Generator.twist(*p) for p, e in g.letters if e % 2]
    raise TypeError(f"cannot act by {type(g).__name__}")


def act_symbol(g: Generator, sym: BasisSymbol, n: int) -> H1Vector:
    """
    g·sym, computed by conjugating the defining word of `sym` and reducing.

    σ_k^s moves each prefix twist T_p to T_π(p) and sends τ_ab to W·τ_t, where
    σ_k^s A_ab σ_k^-s = W A_t W⁻¹ with W an Artin generator power or 1.
    """
    if g.max_index > n:
        raise ValueError(f"{g} does not act on {n} strands")
    if g.kind is GeneratorKind.TWIST:
        factors = (Factor.twist(*g.pair), *(Factor.twist(*p) for p in sym.prefix))
        return reduce_polynomials(n, [(sym.target, prefix_polynomial(factors, sym.target))])
    conj = twist_conjugate(g.index, g.sign, *sym.target)
    factors = [Factor.twist(*twist_conjugate(g.index, g.sign, *p).target) for p in sym.prefix]
    if conj.conjugator is not None:
        factors.append(Factor.twist(*conj.conjugator))
    target = pair(*conj.target)
    return reduce_polynomials(n, [(target, prefix_polynomial(factors, target))])


@lru_cache(maxsize=256)
def _images(g: Generator, n: int) -> dict[BasisSymbol, H1Vector]:
    return {sym: act_symbol(g, sym, n) for sym in enumerate_basis(n)}


def _apply(g: Generator, v: H1Vector) -> H1Vector:
    images = _images(g, v.n)
    acc: dict[BasisSymbol, Fraction] = {}
    for sym, c in v.coeffs:
        for s, d in images[sym].coeffs:
            acc[s] = acc.get(s, Fraction(0)) + c * d
    return H1Vector(v.n, acc)


def act(g: Generator | str | BraidWord | PureBraidWord, v: H1Vector) -> H1Vector:
    """
    Act on `v` by a generator or a word; words act letter by letter from the right.

    Example:
    ```python
    >>> v = H1Vector.from_symbol(BasisSymbol.tau(1, 2), n=3)
    >>> str(act("T(1,3)", v))
    'T(1,3)*t(1,2)'
    ```
    """
    for gen in reversed(as_generators(g)):
        v = _apply(gen, v)
    return v


@lru_cache(maxsize=256)
def _generator_matrix(g: Generator, n: int) -> DomainMatrix:
    index = basis_index(n)
    entries: dict[int, dict[int, Fraction]] = {}
    for sym, image in _images(g, n).items():
        col = index[sym]
        for s, c in image.coeffs:
            entries.setdefault(index[s], {})[col] = c
    logger.debug("built matrix of %s on %d strands", g, n)
    return sparse_matrix(entries, (len(index), len(index)))


def generator_matrix(g: Generator | str, n: int) -> DomainMatrix:
    """
    Matrix of a generator in the basis `enumerate_basis(n)`; column c is the image
    of the c-th basis symbol. Matrices are cached and must not be mutated.
    """
    (gen,) = as_generators(g)
    return _generator_matrix(gen, n)


def word_matrix(w: BraidWord | PureBraidWord | str, n: int | None = None) -> DomainMatrix:
    """Matrix of a braid word: the product of its generator matrices left to right."""
    if isinstance(w, str):
        if n is None:
            raise ValueError("n is required for a word given as text")
        w = BraidWord.parse(w, n)
    n = w.n if n is None else n
    gens = as_generators(w)
    out = identity_matrix(len(enumerate_basis(n)))
    for gen in gens:
        out = out.matmul(_generator_matrix(gen, n))
    return out
