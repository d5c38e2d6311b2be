"""Prefix polynomials over a fixed target τ_ab in the difference basis"""

from __future__ import annotations

__all__ = [
    "Poly",
    "twist_extra",
    "multiply_factor",
    "prefix_polynomial",
    "symbol_polynomial",
    "expand_polynomial",
]

from collections.abc import Iterable
from fractions import Fraction

from level4_braids.homology.basis import BasisSymbol, s2_symbol, s3_symbol
from level4_braids.homology.expressions import Factor, FactorKind
from level4_braids.utils import Pair, pair

# Keys are sets X of extra labels standing for D_X = Π_{x∈X} (1 - u_x), where
# u_x is the common action of T_ax and T_bx on τ_ab. D_X τ_ab vanishes for |X| ≥ 3.
Poly = dict[frozenset[int], Fraction]

_ONE: frozenset[int] = frozenset()
_MAX_DEGREE = 2


def twist_extra(p: Pair, target: Pair) -> int | None:
    """The label x with T_p τ_target = u_x τ_target, or None when T_p acts trivially."""
    common = set(p) & set(target)
    if len(common) != 1:
        return None
    (x,) = set(p) - common
    return x


def _add(out: Poly, key: frozenset[int], c: Fraction) -> None:
    if len(key) > _MAX_DEGREE or not c:
        return
    v = out.get(key, Fraction(0)) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _mul_u(poly: Poly, x: int) -> Poly:
    out: Poly = {}
    for key, c in poly.items():
        if x in key:
            _add(out, key, -c)
        else:
            _add(out, key, c)
            _add(out, key | {x}, -c)
    return out


def _mul_diff(poly: Poly, x: int) -> Poly:
    out: Poly = {}
    for key, c in poly.items():
        if x in key:
            _add(out, key, 2 * c)
        else:
            _add(out, key | {x}, c)
    return out


def multiply_factor(poly: Poly, factor: Factor, target: Pair) -> Poly:
    """factor · poly, both read against the target τ_target."""
    x = twist_extra(factor.pair, target)
    if x is None:
        if factor.kind is FactorKind.TWIST:
            return dict(poly)
        if factor.kind is FactorKind.DIFFERENCE:
            return {}
        return {k: 2 * c for k, c in poly.items()}
    if factor.kind is FactorKind.TWIST:
        return _mul_u(poly, x)
    if factor.kind is FactorKind.DIFFERENCE:
        return _mul_diff(poly, x)
    out: Poly = {}
    for key, c in poly.items():
        _add(out, key, 2 * c)
    for key, c in _mul_diff(poly, x).items():
        _add(out, key, -c)
    return out


def prefix_polynomial(factors: Iterable[Factor], target: Pair, coeff: Fraction | int = 1) -> Poly:
    poly: Poly = {_ONE: Fraction(coeff)} if coeff else {}
    for f in reversed(tuple(factors)):
        poly = multiply_factor(poly, f, target)
    return poly


def symbol_polynomial(sym: BasisSymbol) -> Poly:
    poly: Poly = {_ONE: Fraction(1)}
    for x in sorted(sym.extras):
        poly = _mul_u(poly, x)
    return poly


def expand_polynomial(target: Pair, poly: Poly) -> dict[BasisSymbol, Fraction]:
    """Coordinates of Σ_X c_X D_X τ_target in the basis S."""
    out: dict[BasisSymbol, Fraction] = {}

    def add(sym: BasisSymbol, c: Fraction) -> None:
        out[sym] = out.get(sym, Fraction(0)) + c

    for key, c in poly.items():
        if not key:
            add(BasisSymbol.tau(*target), c)
        elif len(key) == 1:
            (x,) = key
            add(BasisSymbol.tau(*target), c)
            add(s2_symbol(target, x), -c)
        else:
            t, extras = target, tuple(sorted(key))
            p, q, _, s = sorted((*target, *extras))
            if p not in t:
                # key lemma: D_{xy} τ_ab = ±D_{ab} τ_xy, negative only for τ_qs
                if t == (q, s):
                    c = -c
                t, extras = pair(*extras), t
            add(BasisSymbol.tau(*t), c)
            add(s2_symbol(t, extras[0]), -c)
            add(s2_symbol(t, extras[1]), -c)
            add(s3_symbol(t, extras), c)
    return {k: v for k, v in out.items() if v}
