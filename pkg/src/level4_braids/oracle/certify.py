"""H_1 of the level-4 subgroup from its presentation, and checks of the rewriting engine against it"""

from __future__ import annotations

__all__ = [
    "OracleH1",
    "CertificateReport",
    "oracle_h1",
    "symbol_word",
    "expression_words",
    "oracle_class",
    "relation_check",
    "basis_isomorphism",
    "random_expression",
    "reduce_certificate",
    "identity_failures",
    "jacobi_failures",
    "witt_hall_failures",
]

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import numpy as np
from sympy.polys.matrices import DomainMatrix

from level4_braids.braids import PureBraidWord, commutator, conjugate, full_twist, random_pure_word
from level4_braids.config import Limits
from level4_braids.homology import (
    BasisSymbol,
    Factor,
    FactorKind,
    H1Vector,
    ModuleExpression,
    Term,
    boundary_expression,
    commutator_class,
    enumerate_basis,
    key_lemma_identities,
    lantern_identities,
    reduce,
    tau_boundary,
)
from level4_braids.oracle.abelian import AbelianizationResult, abelianization
from level4_braids.oracle.schreier import SubgroupPresentation, subgroup_presentation
from level4_braids.utils import Pair, all_pairs, with_progress
from level4_braids.utils.linalg import rank, sparse_matrix

logger = logging.getLogger(__name__)

Rational = Fraction | int
Combination = Iterable[tuple[Rational, PureBraidWord]]
Coordinates = tuple[Fraction, ...]


def _square_conjugate(prefix: Sequence[Pair], target: Pair, n: int) -> PureBraidWord:
    """g A_target² g⁻¹ for g = A_{p1} A_{p2} ⋯."""
    g = [(p, 1) for p in prefix]
    return PureBraidWord(n, [*g, (target, 2), *((p, -1) for p in reversed(prefix))])


def symbol_word(sym: BasisSymbol, n: int) -> PureBraidWord:
    """The word whose class is the basis symbol `sym`."""
    return _square_conjugate(sym.prefix, sym.target, n)


def _term_words(t: Term, n: int) -> list[tuple[Fraction, PureBraidWord]]:
    choices = []
    for f in t.factors:
        if f.kind is FactorKind.TWIST:
            choices.append([(1, (f.pair,))])
        else:
            sign = -1 if f.kind is FactorKind.DIFFERENCE else 1
            choices.append([(1, ()), (sign, (f.pair,))])
    out = []
    for picks in product(*choices):
        c = t.coeff
        prefix: tuple[Pair, ...] = ()
        for s, p in picks:
            c *= s
            prefix += p
        out.append((c, _square_conjugate(prefix, t.target, n)))
    return out


def expression_words(e: ModuleExpression | H1Vector) -> list[tuple[Fraction, PureBraidWord]]:
    """Expand every group-ring factor so that `e` is a rational combination of words."""
    if isinstance(e, H1Vector):
        e = ModuleExpression.from_vector(e)
    return [cw for t in e.terms for cw in _term_words(t, e.n)]


class OracleH1:
    """
    H_1(PB_n²; Q) computed from the Reidemeister-Schreier presentation.

    Example:
    ```python
    >>> OracleH1(3).rank
    6
    ```

    Args:
        n (int): Strand count.
        limits (Limits, optional): n may not exceed `limits.oracle`.
        smith (bool): Also compute the elementary divisors. Defaults to True.
        progress (bool): Show a progress bar while rewriting relators. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.
    """
    __slots__ = ("n", "subgroup", "result", "_phi")

    def __init__(
        self,
        n: int,
        *,
        limits: Limits | None = None,
        smith: bool = True,
        progress: bool = False,
        **tqdm_kw,
    ):
        self.n = n
        self.subgroup: SubgroupPresentation = subgroup_presentation(
            n, limits=limits, progress=progress, **tqdm_kw)
        self.result: AbelianizationResult = abelianization(self.subgroup.presentation, smith=smith)
        self._phi: dict[BasisSymbol, Coordinates] | None = None
        logger.info("oracle n=%d: rank %d, divisors %s", n, self.rank, self.result.divisors)

    @property
    def rank(self) -> int:
        return self.result.free_rank

    def word_class(self, w: PureBraidWord) -> Coordinates:
        """
        Coordinates of a word of the level-4 subgroup.

        Raises:
            NotInSubgroup: if `w` is not in the subgroup.
        """
        return self.result.coordinates(self.subgroup.exponents(w))

    def combination_class(self, combo: Combination | PureBraidWord) -> Coordinates:
        if isinstance(combo, PureBraidWord):
            return self.word_class(combo)
        acc = [Fraction(0)] * self.rank
        for c, w in combo:
            if not c:
                continue
            for k, x in enumerate(self.word_class(w)):
                acc[k] += c * x
        return tuple(acc)

    def expression_class(self, e: ModuleExpression | H1Vector) -> Coordinates:
        """Class of a module expression with every factor spelled out as words."""
        return self.combination_class(expression_words(e))

    def symbol_classes(self) -> dict[BasisSymbol, Coordinates]:
        if self._phi is None:
            self._phi = {s: self.word_class(symbol_word(s, self.n)) for s in enumerate_basis(self.n)}
        return self._phi

    def image(self, v: H1Vector) -> Coordinates:
        """Image of an `H1Vector` under the map sending each basis symbol to its word's class."""
        phi = self.symbol_classes()
        acc = [Fraction(0)] * self.rank
        for sym, c in v.coeffs:
            for k, x in enumerate(phi[sym]):
                acc[k] += c * x
        return tuple(acc)

    def to_dict(self) -> dict:
        return {"n": self.n, **self.subgroup.to_dict(), **self.result.to_dict()}


@lru_cache(maxsize=4)
def _oracle(n: int, limits: Limits) -> OracleH1:
    return OracleH1(n, limits=limits)


def oracle_h1(n: int, *, limits: Limits | None = None) -> OracleH1:
    """Cached `OracleH1` for n strands."""
    return _oracle(n, limits or Limits.from_env())


def oracle_class(w: PureBraidWord, *, limits: Limits | None = None) -> Coordinates:
    """
    Rational coordinates of the class of `w` in H_1(PB_n²; Q).

    Raises:
        NotInSubgroup: if `w` is not in the level-4 subgroup.
    """
    return oracle_h1(w.n, limits=limits).word_class(w)


def _side(x, n: int | None) -> tuple[int, object]:
    if isinstance(x, (PureBraidWord, ModuleExpression, H1Vector)):
        return x.n, x
    x = list(x)
    if not x and n is None:
        raise ValueError("cannot read the strand count of an empty combination")
    return (x[0][1].n if x else n), x


def relation_check(lhs, rhs, *, oracle: OracleH1 | None = None, limits: Limits | None = None) -> bool:
    """
    Whether two sides have the same class; each side is a word, a rational
    combination of words, or a module expression.

    Example:
    ```python
    >>> g = PureBraidWord.parse("A(1,3) A(2,3)", n=3)
    >>> relation_check(conjugate(g, PureBraidWord.generator(1, 2, 3, 2)),
    ...                PureBraidWord.generator(1, 2, 3, 2))
    True
    ```
    """
    n1, a = _side(lhs, oracle.n if oracle else None)
    n2, b = _side(rhs, n1)
    if n1 != n2:
        raise ValueError(f"sides on {n1} and {n2} strands")
    oracle = oracle or oracle_h1(n1, limits=limits)

    def value(x) -> Coordinates:
        if isinstance(x, (ModuleExpression, H1Vector)):
            return oracle.expression_class(x)
        return oracle.combination_class(x)

    return value(a) == value(b)


def basis_isomorphism(n: int, *, oracle: OracleH1 | None = None,
                      limits: Limits | None = None) -> DomainMatrix:
    """The matrix whose columns are the oracle classes of the words of the basis S."""
    oracle = oracle or oracle_h1(n, limits=limits)
    phi = oracle.symbol_classes()
    basis = enumerate_basis(n)
    entries = {i: {j: phi[s][i] for j, s in enumerate(basis) if phi[s][i]}
               for i in range(oracle.rank)}
    return sparse_matrix(entries, (oracle.rank, len(basis)))


def random_expression(n: int, rng: np.random.Generator, *, terms: int = 3,
                      max_factors: int = 3) -> ModuleExpression:
    """A random combination of small-coefficient terms with twist, sum and difference factors."""
    pairs = all_pairs(n)
    kinds = list(FactorKind)
    out = []
    for _ in range(terms):
        target = pairs[int(rng.integers(len(pairs)))]
        factors = tuple(
            Factor(kinds[int(rng.integers(len(kinds)))], pairs[int(rng.integers(len(pairs)))])
            for _ in range(int(rng.integers(0, max_factors + 1)))
        )
        coeff = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))
        out.append(Term(coeff, factors, target))
    return ModuleExpression(n, out)


@dataclass(frozen=True, slots=True)
class CertificateReport:
    n: int
    checked: int
    isomorphism: bool
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.isomorphism and not self.failures

    def to_dict(self) -> dict:
        return {"n": self.n, "checked": self.checked, "isomorphism": self.isomorphism,
                "failures": list(self.failures), "passed": self.passed}


def reduce_certificate(
    n: int,
    count: int = 200,
    seed: int = 0,
    *,
    oracle: OracleH1 | None = None,
    limits: Limits | None = None,
    progress: bool = False,
    **tqdm_kw,
) -> CertificateReport:
    """
    Compare `reduce` with the oracle on `count` random expressions.

    The basis words must map to a basis of the oracle's H_1, and for each
    expression e the image of reduce(e) must equal the class of e's words.

    Args:
        n (int): Strand count.
        count (int): Number of random expressions. Defaults to 200.
        seed (int): Seed of the numpy generator. Defaults to 0.
        oracle (OracleH1, optional): Reuse an oracle.
        limits (Limits, optional): Bounds when the oracle is built here.
        progress (bool): Show a progress bar. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.
    """
    oracle = oracle or oracle_h1(n, limits=limits)
    phi = basis_isomorphism(n, oracle=oracle)
    iso = phi.shape[0] == phi.shape[1] and rank(phi) == phi.shape[1]
    rng = np.random.default_rng(seed)
    failures = []
    for _ in with_progress(range(count), progress=progress, total=count,
                           desc=f"certificate n={n}", **tqdm_kw):
        e = random_expression(n, rng)
        if oracle.image(reduce(e)) != oracle.expression_class(e):
            failures.append(str(e))
    logger.info("certificate n=%d: %d expressions, %d failures", n, count, len(failures))
    return CertificateReport(n, count, iso, tuple(failures))


def identity_failures(n: int, *, oracle: OracleH1 | None = None,
                      limits: Limits | None = None) -> list[str]:
    """
    Names of the lantern, key-lemma, boundary-twist and commutator instances on n
    strands whose two sides differ in the oracle.
    """
    oracle = oracle or oracle_h1(n, limits=limits)
    zero = (Fraction(0),) * oracle.rank
    failures = []
    for i, j, k in combinations(range(1, n + 1), 3):
        g = PureBraidWord(n, [((i, k), 1), ((j, k), 1)])
        sq = PureBraidWord.generator(i, j, n, 2)
        if not relation_check(conjugate(g, sq), sq, oracle=oracle):
            failures.append(f"lantern conjugation {(i, j, k)}")
        x, y = PureBraidWord.generator(i, j, n), PureBraidWord.generator(j, k, n)
        if oracle.word_class(commutator(x, y)) != oracle.image(commutator_class(i, j, k, n)):
            failures.append(f"commutator {(i, j, k)}")
        for a, b, c in ((i, j, k), (i, k, j), (j, k, i)):
            tau = ModuleExpression.tau(a, b, n)
            e = tau.times(Factor.twist(a, c)) - tau.times(Factor.twist(b, c))
            if oracle.expression_class(e) != zero:
                failures.append(f"lantern {(a, b, c)}")
    for quad in combinations(range(1, n + 1), 4):
        for a, b in combinations(quad, 2):
            c, d = (x for x in quad if x not in (a, b))
            labels = (a, b, c, d)
            for m, e in enumerate(lantern_identities(*labels, n)):
                if oracle.expression_class(e) != zero:
                    failures.append(f"lantern {labels} #{m}")
        for m, e in enumerate(key_lemma_identities(*quad, n)):
            if oracle.expression_class(e) != zero:
                failures.append(f"key lemma {quad} #{m}")
    boundary = oracle.word_class(full_twist(n).power(2))
    if boundary != oracle.image(tau_boundary(n)):
        failures.append("boundary twist reduced")
    if boundary != oracle.expression_class(boundary_expression(n)):
        failures.append("boundary twist expansion")
    logger.debug("identity checks n=%d: %d failures", n, len(failures))
    return failures


def _triples(n: int, count: int, seed: int, length: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield tuple(random_pure_word(n, length, rng) for _ in range(3))


def jacobi_failures(n: int = 3, count: int = 50, seed: int = 0, *, length: int = 4,
                    oracle: OracleH1 | None = None, limits: Limits | None = None) -> list[str]:
    """
    Random triples for which (1-x)[y,z] - (1-y)[x,z] + (1-z)[x,y] is not zero,
    the action of g being conjugation.
    """
    oracle = oracle or oracle_h1(n, limits=limits)
    zero = (Fraction(0),) * oracle.rank
    failures = []
    for x, y, z in _triples(n, count, seed, length):
        combo = []
        for g, (a, b), s in ((x, (y, z), 1), (y, (x, z), -1), (z, (x, y), 1)):
            c = commutator(a, b)
            combo += [(s, c), (-s, conjugate(g, c))]
        if oracle.combination_class(combo) != zero:
            failures.append(f"{x} | {y} | {z}")
    return failures


def witt_hall_failures(n: int = 3, count: int = 50, seed: int = 0, *, length: int = 4,
                       oracle: OracleH1 | None = None, limits: Limits | None = None) -> list[str]:
    """Random triples for which [x,yz] differs from [x,y] + y·[x,z]."""
    oracle = oracle or oracle_h1(n, limits=limits)
    failures = []
    for x, y, z in _triples(n, count, seed, length):
        rhs = [(1, commutator(x, y)), (1, conjugate(y, commutator(x, z)))]
        if not relation_check(commutator(x, y * z), rhs, oracle=oracle):
            failures.append(f"{x} | {y} | {z}")
    return failures
