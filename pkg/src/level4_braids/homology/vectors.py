"""Sparse exact vectors in H_1(B_n[4]; Q)"""

from __future__ import annotations

__all__ = [
    "H1Vector",
]

import json
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from level4_braids.errors import ParseError
from level4_braids.homology.basis import BasisSymbol, basis_index, enumerate_basis
from level4_braids.utils import format_rational, parse_rational

Rational = Fraction | int

_TERM = re.compile(r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?((?:T\(\d+,\d+\))*\*?t\(\d+,\d+\))")


@dataclass(frozen=True, slots=True, init=False)
class H1Vector:
    """
    Finite rational combination of basis symbols over n strands.

    Example:
    ```python
    >>> v = H1Vector.from_symbol(BasisSymbol.tau(1, 2), n=3)
    >>> str(v - 2 * v)
    '-t(1,2)'
    ```

    Args:
        n (int): Strand count.
        coeffs (Mapping[BasisSymbol, Fraction | int]): Coefficients; zeros are dropped.
    """
    n: int = field()
    coeffs: tuple[tuple[BasisSymbol, Fraction], ...] = field()

    def __init__(self, n: int, coeffs: Mapping[BasisSymbol, Rational] | None = None):
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"n must be int, got {type(n).__name__}")
        items = []
        for sym, c in (coeffs or {}).items():
            if not isinstance(sym, BasisSymbol):
                raise TypeError(f"keys must be BasisSymbol, got {type(sym).__name__}")
            if sym.max_index > n:
                raise ValueError(f"{sym} does not live on {n} strands")
            c = Fraction(c)
            if c:
                items.append((sym, c))
        items.sort(key=lambda kv: kv[0].sort_key())
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(items))

    @classmethod
    def zero(cls, n: int) -> H1Vector:
        return cls(n)

    @classmethod
    def from_symbol(cls, sym: BasisSymbol, n: int, coeff: Rational = 1) -> H1Vector:
        return cls(n, {sym: coeff})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[BasisSymbol, Rational]]) -> H1Vector:
        acc: dict[BasisSymbol, Fraction] = {}
        for sym, c in terms:
            acc[sym] = acc.get(sym, Fraction(0)) + Fraction(c)
        return cls(n, acc)

    @classmethod
    def from_column(cls, n: int, values: Iterable[Rational]) -> H1Vector:
        return cls(n, dict(zip(enumerate_basis(n), values)))

    @classmethod
    def parse(cls, text: str, n: int) -> H1Vector:
        """Parse "t(1,2) - 1/2*T(1,3)*t(1,2)" style sums of basis symbols."""
        stripped = text.replace(" ", "")
        if stripped in ("", "0"):
            return cls(n)
        pos, terms = 0, []
        for m in _TERM.finditer(stripped):
            if m.start() != pos or (pos and not m.group(1)):
                raise ParseError(f"cannot parse vector {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
            terms.append((BasisSymbol.parse(m.group(3)), sign * coeff))
            pos = m.end()
        if pos != len(stripped):
            raise ParseError(f"cannot parse vector {text!r}")
        return cls.from_terms(n, terms)

    def as_dict(self) -> dict[BasisSymbol, Fraction]:
        return dict(self.coeffs)

    def __getitem__(self, sym: BasisSymbol) -> Fraction:
        return self.as_dict().get(sym, Fraction(0))

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _check(self, other: H1Vector) -> None:
        if not isinstance(other, H1Vector):
            raise TypeError(f"expected H1Vector, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"vectors on {self.n} and {other.n} strands")

    def __add__(self, other: H1Vector) -> H1Vector:
        self._check(other)
        return H1Vector.from_terms(self.n, [*self.coeffs, *other.coeffs])

    def __sub__(self, other: H1Vector) -> H1Vector:
        return self + (-other)

    def __neg__(self) -> H1Vector:
        return self.scale(-1)

    def scale(self, c: Rational) -> H1Vector:
        return H1Vector(self.n, {s: Fraction(c) * v for s, v in self.coeffs})

    def __mul__(self, c: Rational) -> H1Vector:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def to_column(self) -> list[Fraction]:
        index = basis_index(self.n)
        col = [Fraction(0)] * len(index)
        for sym, c in self.coeffs:
            col[index[sym]] = c
        return col

    def embed(self, n: int) -> H1Vector:
        """The same symbols read on `n` strands."""
        return H1Vector(n, dict(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, (sym, c) in enumerate(self.coeffs):
            sign = "-" if c < 0 else ("+" if k else "")
            mag = abs(c)
            body = str(sym) if mag == 1 else f"{format_rational(mag)}*{sym}"
            parts.append(f"{sign} {body}".strip() if k else f"{sign}{body}")
        return " ".join(parts)

    def to_dict(self) -> dict[str, str]:
        return {str(sym): format_rational(c) for sym, c in self.coeffs}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
