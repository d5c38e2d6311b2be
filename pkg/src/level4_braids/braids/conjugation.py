"""Conjugation of Artin generators by half-twists"""

from __future__ import annotations

__all__ = [
    "TwistConjugate",
    "twist_conjugate",
    "conj_pure",
    "conjugate_pure",
]

from dataclasses import dataclass

from level4_braids.braids.burau import burau_mod
from level4_braids.braids.words import BraidWord, PureBraidWord
from level4_braids.errors import ConjugationMismatch
from level4_braids.utils import Pair

# mod 8 sees the conjugator as well as the target pair
_CHECK_MODULUS = 8


@dataclass(frozen=True, slots=True)
class TwistConjugate:
    """σ_k^s A_ab σ_k^-s = W A_target W⁻¹ with W = A_conjugator^exponent or 1."""
    target: Pair
    conjugator: Pair | None = None
    exponent: int = 1

    def as_word(self, n: int, power: int = 1) -> PureBraidWord:
        core = [(self.target, power)]
        if self.conjugator is None:
            return PureBraidWord(n, core)
        w = (self.conjugator, self.exponent)
        return PureBraidWord(n, [w, *core, (self.conjugator, -self.exponent)])


def twist_conjugate(k: int, sign: int, a: int, b: int) -> TwistConjugate:
    """
    Table of σ_k^sign A_ab σ_k^-sign for a < b.

    Example:
    ```python
    >>> twist_conjugate(1, 1, 2, 3)
    TwistConjugate(target=(1, 3), conjugator=(1, 2), exponent=1)
    ```
    """
    if not a < b:
        raise ValueError(f"need a < b, got ({a}, {b})")
    if k not in (a - 1, a, b - 1, b) or (k == a and b == a + 1):
        return TwistConjugate((a, b))
    if sign > 0:
        if k == b:
            return TwistConjugate((a, b + 1))
        if k == a:
            return TwistConjugate((a + 1, b))
        if k == a - 1:
            return TwistConjugate((a - 1, b), (a - 1, a), 1)
        return TwistConjugate((a, b - 1), (b - 1, b), 1)
    if k == a - 1:
        return TwistConjugate((a - 1, b))
    if k == b - 1:
        return TwistConjugate((a, b - 1))
    if k == a:
        return TwistConjugate((a + 1, b), (a, a + 1), -1)
    return TwistConjugate((a, b + 1), (b, b + 1), -1)


def conj_pure(
    k: int,
    w: PureBraidWord,
    *,
    sign: int = 1,
    check: bool = True,
) -> PureBraidWord:
    """
    Rewrite σ_k^sign w σ_k^-sign as a pure braid word.

    Example:
    ```python
    >>> str(conj_pure(1, PureBraidWord.generator(1, 4, n=4)))
    'A(2,4)'
    ```

    Args:
        k (int): Index of the half-twist.
        w (PureBraidWord): The pure word to conjugate.
        sign (int): +1 for σ_k, -1 for σ_k⁻¹. Defaults to 1.
        check (bool): Compare Burau images mod 8 of both sides. Defaults to True.

    Raises:
        ConjugationMismatch: if the check fails.
    """
    if not 1 <= k <= w.n - 1:
        raise ValueError(f"generator index {k} out of range for n={w.n}")
    letters = []
    for (a, b), e in w.letters:
        letters.extend(twist_conjugate(k, sign, a, b).as_word(w.n, e).letters)
    out = PureBraidWord(w.n, letters).freely_reduced()
    if check:
        s = BraidWord.sigma(k, w.n, sign)
        lhs = burau_mod(s * w.to_braid_word() * s.inverse(), _CHECK_MODULUS)
        if lhs != burau_mod(out, _CHECK_MODULUS):
            raise ConjugationMismatch(f"σ_{k}^{sign} ({w}) σ_{k}^{-sign} != {out}")
    return out


def conjugate_pure(g: BraidWord, w: PureBraidWord, *, check: bool = True) -> PureBraidWord:
    """g w g⁻¹ as a pure braid word, conjugating by the letters of g right to left."""
    if g.n != w.n:
        raise ValueError(f"strand counts differ: {g.n} != {w.n}")
    for k, s in reversed(g.letters):
        w = conj_pure(k, w, sign=s, check=check)
    return w
