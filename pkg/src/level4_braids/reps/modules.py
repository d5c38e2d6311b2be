"""Z_n-modules given by generator matrices, and braid words acting on them"""

from __future__ import annotations

__all__ = [
    "Representation",
    "WordActionMixin",
    "H1Module",
    "MatrixModule",
]

from collections.abc import Sequence
from fractions import Fraction
from typing import Protocol, runtime_checkable

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from level4_braids.braids import BraidWord, artin_generator
from level4_braids.homology import Generator, dim_h1, generator_matrix
from level4_braids.utils.linalg import identity_matrix, solve_in_basis, trace


@runtime_checkable
class Representation(Protocol):
    """Any finite-dimensional Z_n-module with matrices for σ_k^{±1}."""
    n: int

    @property
    def dim(self) -> int: ...
    def sigma_matrix(self, k: int, sign: int = 1) -> DomainMatrix: ...
    def twist_matrix(self, i: int, j: int) -> DomainMatrix: ...
    def apply_word(self, w: BraidWord, vectors: DomainMatrix | None = None) -> DomainMatrix: ...
    def word_trace(self, w: BraidWord) -> Fraction: ...


class WordActionMixin:
    """
    Concrete implementation of the word-action part of `Representation`.

    Drop-in mixin for any object with `n`, `dim` and `sigma_matrix()`.
    """
    def apply_word(self, w: BraidWord, vectors: DomainMatrix | None = None) -> DomainMatrix:
        """
        Matrix of `w` times `vectors` (the identity when omitted).

        Letters act from the right, so only matrix-times-columns products are formed.
        """
        if w.n > self.n:  # type: ignore[attr-defined]
            raise ValueError(f"word on {w.n} strands does not act on {self.n}")  # type: ignore[attr-defined]
        out = identity_matrix(self.dim) if vectors is None else vectors  # type: ignore[attr-defined]
        for k, s in reversed(w.letters):
            out = self.sigma_matrix(k, s).matmul(out)  # type: ignore[attr-defined]
        return out

    def word_trace(self, w: BraidWord) -> Fraction:
        return trace(self.apply_word(w))

    def restricted_trace(self, w: BraidWord, basis: DomainMatrix) -> Fraction:
        """Trace of `w` on the invariant subspace spanned by the columns of `basis`."""
        if basis.shape[1] == 0:
            return Fraction(0)
        return trace(solve_in_basis(basis, self.apply_word(w, basis)))

    def twist_matrix(self, i: int, j: int) -> DomainMatrix:
        return self.apply_word(artin_generator(i, j, self.n))  # type: ignore[attr-defined]


class H1Module(WordActionMixin):
    """
    H_1(B_n[4]; Q) in the basis `enumerate_basis(n)`.

    Example:
    ```python
    >>> H1Module(3).word_trace(BraidWord(3))
    Fraction(6, 1)
    ```
    """
    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        self.n = n

    @property
    def dim(self) -> int:
        return dim_h1(self.n)

    def sigma_matrix(self, k: int, sign: int = 1) -> DomainMatrix:
        return generator_matrix(Generator.sigma(k, sign), self.n)

    def twist_matrix(self, i: int, j: int) -> DomainMatrix:
        return generator_matrix(Generator.twist(i, j), self.n)

    def __repr__(self) -> str:
        return f"H1Module(n={self.n})"


class MatrixModule(WordActionMixin):
    """
    A module given by explicit matrices for σ_1, ..., σ_{n-1}.

    Args:
        n (int): Strand count.
        sigmas (Sequence[DomainMatrix]): Square matrices of σ_1, ..., σ_{n-1}.
        dim (int, optional): Dimension; required only when n < 2.
    """
    __slots__ = ("n", "_dim", "_sigmas", "_inverses")

    def __init__(self, n: int, sigmas: Sequence[DomainMatrix], dim: int | None = None):
        if len(sigmas) != max(n - 1, 0):
            raise ValueError(f"expected {n - 1} generator matrices, got {len(sigmas)}")
        shapes = {m.shape for m in sigmas}
        if len(shapes) > 1 or any(r != c for r, c in shapes):
            raise ValueError(f"generator matrices must be square of one size, got {shapes}")
        if dim is None:
            if not sigmas:
                raise ValueError("dim is required when there are no generators")
            dim = sigmas[0].shape[0]
        self.n = n
        self._dim = dim
        self._sigmas = [m.convert_to(QQ) for m in sigmas]
        self._inverses = [m.inv() for m in self._sigmas]

    @classmethod
    def trivial(cls, n: int) -> MatrixModule:
        return cls(n, [identity_matrix(1) for _ in range(n - 1)], dim=1)

    @property
    def dim(self) -> int:
        return self._dim

    def sigma_matrix(self, k: int, sign: int = 1) -> DomainMatrix:
        if not 1 <= k < self.n:
            raise ValueError(f"σ_{k} does not act on {self.n} strands")
        return (self._sigmas if sign > 0 else self._inverses)[k - 1]
