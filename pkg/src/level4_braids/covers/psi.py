"""The detection maps ψ, ψ_{i∞} and ψ_{ij} on H_1(B_n[4]; Q)"""

from __future__ import annotations

__all__ = [
    "ConjugatedSquare",
    "is_linked",
    "psi_base",
    "psi_square",
    "iota",
    "psi_cover",
    "psi_general_curve",
    "artin_curve",
    "psi_word",
]

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from level4_braids.braids import PureBraidWord
from level4_braids.covers.labels import CoverIndex, Label, PairVector, subset_symbol
from level4_braids.errors import CaseMismatch
from level4_braids.homology import BasisSymbol, H1Vector
from level4_braids.utils import Pair, pair


def _plain(xs: Iterable[int]) -> list[Label]:
    return [Label(False, x) for x in xs]


def _primed(xs: Iterable[int]) -> list[Label]:
    return [Label(True, x) for x in xs]


def is_linked(cover: CoverIndex, k: int, l: int) -> bool:
    """{i,j} and {k,ℓ} interleave on the line: i<k<j<ℓ or k<i<ℓ<j, with ∞ last."""
    k, l = pair(k, l)
    i, j = cover.position(cover.i), cover.position(cover.j)
    return i < k < j < l or k < i < l < j


def psi_base(v: H1Vector | PureBraidWord) -> PairVector:
    """
    The restriction of the abelianization of PB_n: τ_ij ↦ 2(ij).

    Prefix twists act trivially on the abelianization, so every basis symbol
    goes to twice its target; a pure braid word goes to its exponent sums.
    """
    if isinstance(v, PureBraidWord):
        return PairVector(v.n, None, {
            (Label(False, a), Label(False, b)): e for (a, b), e in v.exponent_sums().items()
        })
    if not isinstance(v, H1Vector):
        raise TypeError(f"expected H1Vector or PureBraidWord, got {type(v).__name__}")
    entries: dict[tuple[Label, Label], Fraction] = {}
    for sym, c in v.coeffs:
        key = (Label(False, sym.target[0]), Label(False, sym.target[1]))
        entries[key] = entries.get(key, Fraction(0)) + 2 * c
    return PairVector(v.n, None, entries)


def psi_square(cover: CoverIndex, k: int, l: int) -> PairVector:
    """
    ψ_cover(T_kℓ²), by the position of {k,ℓ} relative to the branch indices.

    Example:
    ```python
    >>> str(psi_square(CoverIndex(3, 1), 2, 3))
    "2(23) + 2(2'3')"
    ```
    """
    k, l = pair(k, l)
    n = cover.n
    if l > n:
        raise ValueError(f"pair ({k},{l}) out of range for n={n}")
    common = cover.branch & {k, l}
    if common == {k, l}:
        rest = [x for x in range(1, n + 1) if x not in (k, l)]
        return (subset_symbol([*_plain((k, l)), *_primed(rest)], n, cover).scale(2)
                + subset_symbol(_primed(rest), n, cover).scale(2))
    if common == {k}:
        return subset_symbol([Label(False, k), Label(False, l), Label(True, l)], n, cover)
    if common == {l}:
        return subset_symbol([Label(False, k), Label(True, k), Label(False, l)], n, cover)
    a, b = Label(False, k), Label(False, l)
    if is_linked(cover, k, l):
        return PairVector(n, cover, {(a, b.prime()): 2, (a.prime(), b): 2})
    return PairVector(n, cover, {(a, b): 2, (a.prime(), b.prime()): 2})


def iota(cover: CoverIndex, k: int, l: int) -> dict[Label, Label]:
    """
    The label permutation induced by T_kℓ: (ℓ ℓ') if {i,j} ∩ {k,ℓ} = {k},
    (k k') if it is {ℓ}, otherwise the identity (an empty map).
    """
    k, l = pair(k, l)
    common = cover.branch & {k, l}
    if common == {k}:
        x = l
    elif common == {l}:
        x = k
    else:
        return {}
    return {Label(False, x): Label(True, x), Label(True, x): Label(False, x)}


def _psi_prefixed(cover: CoverIndex, prefix: Sequence[Pair], target: Pair) -> PairVector:
    out = psi_square(cover, *target)
    for p in reversed(prefix):
        out = out.permute(iota(cover, *p))
    return out


def psi_cover(cover: CoverIndex, v: H1Vector | BasisSymbol) -> PairVector:
    """
    ψ_cover extended linearly from τ_kℓ by naturality, ψ(T·f) = ι_T(ψ(f)).

    Example:
    ```python
    >>> v = H1Vector.parse("T(1,2)*t(2,3)", n=3)
    >>> str(psi_cover(CoverIndex(3, 1), v))
    "2(23') + 2(32')"
    ```
    """
    if isinstance(v, BasisSymbol):
        v = H1Vector.from_symbol(v, cover.n)
    if v.n != cover.n:
        raise ValueError(f"vector on {v.n} strands, cover for {cover.n}")
    out = PairVector.zero(cover.n, cover)
    for sym, c in v.coeffs:
        out = out + _psi_prefixed(cover, sym.prefix, sym.target).scale(c)
    return out


def artin_curve(cover: CoverIndex, k: int, l: int) -> tuple[frozenset[int], tuple | None]:
    """The enclosed set and split data of the curve of T_kℓ, for `psi_general_curve`."""
    k, l = pair(k, l)
    A = frozenset({k, l})
    common = cover.branch & A
    if len(common) == 1:
        return A, None
    if not common:
        return A, (({k}, {l}) if is_linked(cover, k, l) else ({k, l}, set()))
    return A, (set(range(1, cover.n + 1)) - A, set())


def psi_general_curve(
    cover: CoverIndex,
    A: Iterable[int],
    split: tuple[Iterable[int], Iterable[int]] | None = None,
) -> PairVector:
    """
    ψ_cover(T_c²) for a curve c enclosing the marked points `A`.

    The curve data depends on how many branch indices c encloses: none needs
    `split = (A1, A2)`, the two classes of A by parity of crossings with the
    branch arc; both needs `split = (B, C)`, the outside points whose arc to
    the boundary crosses the branch arc an even or odd number of times; one
    needs no split.

    Raises:
        CaseMismatch: if `split` does not fit the case determined by `A`.
    """
    n = cover.n
    A = frozenset(A)
    if not A <= set(range(1, n + 1)):
        raise ValueError(f"enclosed labels {sorted(A)} not in 1..{n}")
    common = cover.branch & A
    if len(common) == 1:
        if split is not None:
            raise CaseMismatch(f"curve meets {cover} once; no split expected")
        (x,) = common
        return subset_symbol([*_plain(A), *_primed(A - {x})], n, cover)
    if split is None:
        raise CaseMismatch(f"curve around {sorted(A)} needs split data for {cover}")
    first, second = (frozenset(s) for s in split)
    if first & second:
        raise CaseMismatch(f"split parts overlap: {sorted(first & second)}")
    if not common:
        if first | second != A:
            raise CaseMismatch(f"({sorted(first)}, {sorted(second)}) does not partition {sorted(A)}")
        return (subset_symbol([*_plain(first), *_primed(second)], n, cover).scale(2)
                + subset_symbol([*_primed(first), *_plain(second)], n, cover).scale(2))
    outside = frozenset(range(1, n + 1)) - A
    if first | second != outside:
        raise CaseMismatch(f"({sorted(first)}, {sorted(second)}) does not partition {sorted(outside)}")
    B, C = first, second
    inner = A - cover.branch
    return (subset_symbol([*_plain(A | C), *_primed(B | inner)], n, cover).scale(2)
            + subset_symbol([*_plain(C), *_primed(B)], n, cover).scale(2))


@dataclass(frozen=True, slots=True)
class ConjugatedSquare:
    """g A_p^{2e} g⁻¹ for a pure braid word g."""
    conjugator: PureBraidWord
    pair: Pair
    exponent: int = field(default=1)


def psi_word(cover: CoverIndex | None, factors: Sequence[ConjugatedSquare]) -> PairVector:
    """
    ψ of a level-4 word written as a product of conjugated squares of Artin generators.

    Args:
        cover (CoverIndex | None): The cover, or None for the base map ψ.
        factors (Sequence[ConjugatedSquare]): The factors, in any order.
    """
    if not factors:
        raise ValueError("psi_word needs at least one factor")
    n = factors[0].conjugator.n
    if cover is None:
        out = PairVector.zero(n)
        for f in factors:
            a, b = pair(*f.pair)
            out = out + PairVector(n, None, {(Label(False, a), Label(False, b)): 2 * f.exponent})
        return out
    out = PairVector.zero(n, cover)
    for f in factors:
        prefix = [p for p, e in f.conjugator.letters if e % 2]
        out = out + _psi_prefixed(cover, prefix, pair(*f.pair)).scale(f.exponent)
    return out
