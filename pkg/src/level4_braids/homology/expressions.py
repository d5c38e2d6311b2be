"""Formal expressions (prefix factors)·τ_ij in the Z_n-module H_1(B_n[4]; Q)"""

from __future__ import annotations

__all__ = [
    "FactorKind",
    "Factor",
    "Term",
    "ModuleExpression",
]

import re
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from level4_braids.errors import ParseError
from level4_braids.homology.basis import BasisSymbol
from level4_braids.utils import Pair, format_rational, pair, parse_rational

Rational = Fraction | int

_COEFF = re.compile(r"(\d+(?:/\d+)?)\*?")
_FACTOR = re.compile(r"\(1([+-])T\((\d+),(\d+)\)\)|T\((\d+),(\d+)\)")
_TARGET = re.compile(r"\*?t\((\d+),(\d+)\)")


class FactorKind(str, Enum):
    TWIST = "T"
    DIFFERENCE = "1-T"
    SUM = "1+T"


@dataclass(frozen=True, slots=True)
class Factor:
    """A group-ring factor T_p, (1 - T_p) or (1 + T_p)."""
    kind: FactorKind
    pair: Pair

    @classmethod
    def twist(cls, i: int, j: int) -> Factor:
        return cls(FactorKind.TWIST, pair(i, j))

    @classmethod
    def difference(cls, i: int, j: int) -> Factor:
        return cls(FactorKind.DIFFERENCE, pair(i, j))

    @classmethod
    def sum(cls, i: int, j: int) -> Factor:
        return cls(FactorKind.SUM, pair(i, j))

    def __str__(self) -> str:
        t = f"T({self.pair[0]},{self.pair[1]})"
        if self.kind is FactorKind.TWIST:
            return t
        return f"(1{'-' if self.kind is FactorKind.DIFFERENCE else '+'}{t})"


@dataclass(frozen=True, slots=True)
class Term:
    coeff: Fraction
    factors: tuple[Factor, ...]
    target: Pair

    def __str__(self) -> str:
        body = "".join(str(f) for f in self.factors)
        tau = f"t({self.target[0]},{self.target[1]})"
        return f"{body}*{tau}" if body else tau


@dataclass(frozen=True, slots=True, init=False)
class ModuleExpression:
    """
    A rational combination of terms (f_1 ⋯ f_m)·τ_ij, each f a `Factor`.

    Expressions are formal: nothing is simplified until `reduce` is called.

    Example:
    ```python
    >>> e = ModuleExpression.parse("(1-T(1,4))(1-T(2,3))*t(1,2) - t(3,4)", n=4)
    >>> len(e.terms)
    2
    ```

    Args:
        n (int): Strand count.
        terms (Iterable[Term]): The terms; zero coefficients are dropped.
    """
    n: int = field()
    terms: tuple[Term, ...] = field()

    def __init__(self, n: int, terms: Iterable[Term] = ()):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"n must be int, got {type(n).__name__}")
        kept = []
        for t in terms:
            if not isinstance(t, Term):
                raise TypeError(f"terms must be Term, got {type(t).__name__}")
            labels = [*t.target, *(x for f in t.factors for x in f.pair)]
            if max(labels) > n or min(labels) < 1:
                raise ValueError(f"term {t} does not live on {n} strands")
            if t.coeff:
                kept.append(t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", tuple(kept))

    @classmethod
    def tau(cls, i: int, j: int, n: int, coeff: Rational = 1) -> ModuleExpression:
        return cls(n, [Term(Fraction(coeff), (), pair(i, j))])

    @classmethod
    def from_symbol(cls, sym: BasisSymbol, n: int, coeff: Rational = 1) -> ModuleExpression:
        factors = tuple(Factor(FactorKind.TWIST, p) for p in sym.prefix)
        return cls(n, [Term(Fraction(coeff), factors, sym.target)])

    @classmethod
    def from_vector(cls, v) -> ModuleExpression:
        """The formal expression of an `H1Vector`."""
        out = cls(v.n)
        for sym, c in v.coeffs:
            out = out + cls.from_symbol(sym, v.n, c)
        return out

    @classmethod
    def parse(cls, text: str, n: int) -> ModuleExpression:
        """
        Parse text such as "1/2*(1-T(1,4))(1-T(2,3))*t(1,2) - T(1,3)t(1,2)".

        Raises:
            ParseError: if the text is not a sum of such terms.
        """
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls(n)
        pos, terms = 0, []
        while pos < len(s):
            sign = 1
            if s[pos] in "+-":
                sign = -1 if s[pos] == "-" else 1
                pos += 1
            elif terms:
                raise ParseError(f"expected '+' or '-' at position {pos} of {text!r}")
            coeff = Fraction(1)
            m = _COEFF.match(s, pos)
            if m:
                coeff = parse_rational(m.group(1))
                pos = m.end()
            factors = []
            while (m := _FACTOR.match(s, pos)) is not None:
                if m.group(1):
                    kind = FactorKind.DIFFERENCE if m.group(1) == "-" else FactorKind.SUM
                    factors.append(Factor(kind, pair(int(m.group(2)), int(m.group(3)))))
                else:
                    factors.append(Factor.twist(int(m.group(4)), int(m.group(5))))
                pos = m.end()
                if s.startswith("*", pos) and not s.startswith("*t(", pos):
                    pos += 1
            m = _TARGET.match(s, pos)
            if m is None:
                raise ParseError(f"expected a target t(i,j) at position {pos} of {text!r}")
            terms.append(Term(sign * coeff, tuple(factors), pair(int(m.group(1)), int(m.group(2)))))
            pos = m.end()
        return cls(n, terms)

    def __add__(self, other: ModuleExpression) -> ModuleExpression:
        if not isinstance(other, ModuleExpression):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"expressions on {self.n} and {other.n} strands")
        return ModuleExpression(self.n, [*self.terms, *other.terms])

    def __neg__(self) -> ModuleExpression:
        return self.scale(-1)

    def __sub__(self, other: ModuleExpression) -> ModuleExpression:
        return self + (-other)

    def scale(self, c: Rational) -> ModuleExpression:
        c = Fraction(c)
        return ModuleExpression(self.n, [Term(c * t.coeff, t.factors, t.target) for t in self.terms])

    def __mul__(self, c: Rational) -> ModuleExpression:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def times(self, *factors: Factor) -> ModuleExpression:
        """Left-multiply every term by `factors` (the first factor ends up outermost)."""
        return ModuleExpression(
            self.n, [Term(t.coeff, (*factors, *t.factors), t.target) for t in self.terms]
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, t in enumerate(self.terms):
            sign = "-" if t.coeff < 0 else "+"
            mag = abs(t.coeff)
            body = str(t) if mag == 1 else f"{format_rational(mag)}*{t}"
            if k == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)
