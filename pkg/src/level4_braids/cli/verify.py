"""Named verification suites over every computation in the package"""

from __future__ import annotations

__all__ = [
    "CheckResult",
    "SUITES",
    "suite_names",
    "run_suite",
]

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial

import numpy as np

from level4_braids.braids import (
    BraidWord,
    PureBraidWord,
    enumerate_zn,
    full_twist,
    level_membership,
    random_braid_word,
    random_level4_word,
    zn_order,
)
from level4_braids.config import Limits, check_bound
from level4_braids.covers import independence_certificate
from level4_braids.errors import BoundExceeded, NotOnCentralComponent, UnknownSuite
from level4_braids.formulas import (
    albanese_range,
    betti_tables,
    closed_forms,
    level4_betti,
    smod_euler,
)
from level4_braids.homology import (
    BasisSymbol,
    Generator,
    H1Vector,
    act,
    dim_h1,
    generator_matrix,
    key_lemma_identities,
    lantern_identities,
    reduce,
    word_matrix,
)
from level4_braids.oracle import (
    identity_failures,
    jacobi_failures,
    oracle_h1,
    reduce_certificate,
    witt_hall_failures,
)
from level4_braids.reps import (
    RhoTag,
    alpha_seed,
    decomposition,
    multiplicity_full,
    orbit_submodule,
    torsion_report,
    x3_seed,
    x4_seed,
    zn_abelianization,
)
from level4_braids.utils import column, is_identity, matrix_entries, with_progress

logger = logging.getLogger(__name__)

# random level-4 words drawn per randomized check
_SAMPLES = 200
# random braids drawn when comparing `act` with `word_matrix`
_ACT_SAMPLES = 20


@dataclass(frozen=True, slots=True)
class CheckResult:
    """
    Outcome of one named check; `detail` lists failing instances or context.

    A skipped check has `passed=None` and counts neither as a pass nor a failure.
    """
    name: str
    passed: bool | None
    detail: str = ""
    skipped: bool = False

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "skipped": self.skipped,
                "detail": self.detail}


def _check(name: str, failures: Iterable[str], context: str = "") -> CheckResult:
    failures = list(failures)
    if failures:
        shown = "; ".join(failures[:5])
        more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
        return CheckResult(name, False, shown + more)
    return CheckResult(name, True, context)


def _equal(name: str, got, expected) -> CheckResult:
    if got == expected:
        return CheckResult(name, True, f"{got}")
    return CheckResult(name, False, f"got {got}, expected {expected}")


def _same(a, b) -> bool:
    return matrix_entries(a) == matrix_entries(b)


def _braid_relation_failures(n: int) -> list[str]:
    failures = []
    for i in range(1, n - 1):
        lhs = word_matrix(f"s{i} s{i + 1} s{i}", n)
        if not _same(lhs, word_matrix(f"s{i + 1} s{i} s{i + 1}", n)):
            failures.append(f"s{i} s{i + 1} s{i}")
    for i, j in combinations(range(1, n), 2):
        if j - i >= 2 and not _same(word_matrix(f"s{i} s{j}", n), word_matrix(f"s{j} s{i}", n)):
            failures.append(f"s{i} s{j}")
    for k in range(1, n):
        if not is_identity(word_matrix(f"s{k} S{k}", n)):
            failures.append(f"s{k} S{k}")
    return failures


def _twist_failures(n: int) -> list[str]:
    twists = {(i, j): generator_matrix(Generator.twist(i, j), n)
              for i, j in combinations(range(1, n + 1), 2)}
    failures = [f"T{p}^2" for p, m in twists.items() if not is_identity(m.matmul(m))]
    for (p, a), (q, b) in combinations(twists.items(), 2):
        if not _same(a.matmul(b), b.matmul(a)):
            failures.append(f"T{p} T{q}")
    return failures


def relations_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """Braid relations on matrices, involutive commuting twists, lantern and key-lemma identities."""
    lantern, key = [], []
    for quad in combinations(range(1, n + 1), 4):
        for a, b in combinations(quad, 2):
            c, d = (x for x in quad if x not in (a, b))
            lantern += [f"{(a, b, c, d)} #{m}"
                        for m, e in enumerate(lantern_identities(a, b, c, d, n)) if reduce(e)]
        key += [f"{quad} #{m}" for m, e in enumerate(key_lemma_identities(*quad, n)) if reduce(e)]
    return [
        _check("relations.braid", _braid_relation_failures(n)),
        _check("relations.twists", _twist_failures(n)),
        _check("relations.lantern", lantern, f"{comb(n, 4)} quadruples"),
        _check("relations.key_lemma", key, f"{comb(n, 4)} quadruples"),
    ]


def action_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """B_n[4] and the full twist act trivially; `act` agrees with `word_matrix`."""
    rng = np.random.default_rng(seed)
    level4 = [random_level4_word(n, rng) for _ in range(_SAMPLES)]
    trivial = [str(w) for w in with_progress(level4, progress=progress, desc="level-4 words")
               if not is_identity(word_matrix(w, n))]
    v = H1Vector.from_symbol(BasisSymbol.tau(1, 2), n)
    mismatched = []
    for _ in range(_ACT_SAMPLES):
        g = random_braid_word(n, 6, rng)
        lhs = matrix_entries(word_matrix(g, n).matmul(column(v.to_column())))
        if lhs != matrix_entries(column(act(g, v).to_column())):
            mismatched.append(str(g))
    return [
        _check("action.level4_trivial", trivial, f"{_SAMPLES} words, seed {seed}"),
        _check("action.full_twist", [] if is_identity(word_matrix(full_twist(n), n)) else ["Δ²"]),
        _check("action.matrix_agrees", mismatched, f"{_ACT_SAMPLES} words, seed {seed}"),
    ]


def group_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """Order and abelianization of Z_n, level-4 membership of sample words."""
    check_bound("n", n, limits.enumeration)
    out = [_equal("group.order", len(enumerate_zn(n, limits=limits, progress=progress)), zn_order(n))]
    if 2 <= n <= 4:
        out.append(_equal("group.abelianization", zn_abelianization(n, limits=limits), [4]))
    rng = np.random.default_rng(seed)
    outside = [str(w) for w in (random_level4_word(n, rng) for _ in range(_SAMPLES))
               if not level_membership(w, 4)]
    for i, j in combinations(range(1, n + 1), 2):
        if not level_membership(PureBraidWord.generator(i, j, n, 2), 4):
            outside.append(f"A({i},{j})^2")
        if level_membership(PureBraidWord.generator(i, j, n), 4):
            outside.append(f"A({i},{j}) wrongly inside")
    if n >= 2 and level_membership(BraidWord.sigma(1, n), 4):
        outside.append("s1 wrongly inside")
    out.append(_check("group.membership", outside, f"seed {seed}"))
    return out


def detection_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """Rank of the stacked double-cover detection map equals dim H_1."""
    report = independence_certificate(n, progress=progress)
    return [_equal("detection.rank", report.rank, dim_h1(n))]


def _orbit_expectations(n: int) -> list[tuple[str, H1Vector, RhoTag]]:
    out = [("alpha", alpha_seed(n), RhoTag.TRIVIAL)]
    if n >= 3:
        out.append(("x3", x3_seed(n), RhoTag.RHO3))
    if n >= 4:
        out.append(("x4", x4_seed(n), RhoTag.RHO4))
    return out


def decomposition_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """Multiplicity one for the constituents, their dimensions, and the orbit submodules."""
    rows = decomposition(n, limits=limits, progress=progress)
    out = [
        _check("decomposition.multiplicity_one",
               [f"{row.label}: {row.multiplicity}" for row in rows if row.multiplicity != 1],
               ", ".join(str(row.label) for row in rows)),
        _equal("decomposition.dimension", sum(r.dim * r.multiplicity for r in rows), dim_h1(n)),
    ]
    if n <= min(4, limits.enumeration):
        out.append(_check("decomposition.full_character", [
            f"{row.label}: {m}" for row in rows
            if (m := multiplicity_full(row.label, n=n, limits=limits)) != row.multiplicity
        ]))
    if n >= 2:
        dims = []
        for name, seed_vector, tag in _orbit_expectations(n):
            expected = sum(r.dim for r in rows if r.label.rho is tag)
            got = orbit_submodule(seed_vector).dimension
            if got != expected:
                dims.append(f"{name}: {got} != {expected}")
        out.append(_check("decomposition.orbit_submodules", dims))
    return out


def torsion_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """Depth-one 2-torsion points, their components, and the empty depth-two locus."""
    try:
        points = torsion_report(n, 1, limits=limits, progress=progress)
    except NotOnCentralComponent as e:
        return [CheckResult("torsion.components", False, str(e))]
    expected = 3 * comb(n, 3) + 3 * comb(n, 4)
    return [
        _equal("torsion.count", len(points), expected),
        _check("torsion.dimension", [f"{p.subset}: {p.dimension}" for p in points if p.dimension != 1]),
        _equal("torsion.depth_two", len(torsion_report(n, 2, limits=limits)), 0),
    ]


def oracle_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """The presentation oracle agrees with `reduce`, the basis and the group identities."""
    check_bound("n", n, limits.oracle)
    oracle = oracle_h1(n, limits=limits)
    cert = reduce_certificate(n, count=_SAMPLES, seed=seed, oracle=oracle, progress=progress)
    out = [
        _equal("oracle.rank", oracle.rank, dim_h1(n)),
        _check("oracle.odd_torsion", ["odd torsion present"] if oracle.result.odd_torsion else [],
               f"divisors {oracle.result.divisors}"),
        _check("oracle.certificate", [*cert.failures] + ([] if cert.isomorphism else ["not an isomorphism"]),
               f"{cert.checked} expressions"),
        _check("oracle.identities", identity_failures(n, oracle=oracle)),
    ]
    if n >= 3:
        out.append(_check("oracle.jacobi", jacobi_failures(n, 20, seed, oracle=oracle)))
        out.append(_check("oracle.witt_hall", witt_hall_failures(n, 20, seed, oracle=oracle)))
    return out


def formulas_suite(n: int, *, limits: Limits, seed: int, progress: bool = False) -> list[CheckResult]:
    """Closed formulas against direct counts for g up to 20; Betti tables and the Albanese range."""
    genera = range(1, 21)
    b1 = [f"g={g}" for g in genera
          if closed_forms(g)["b1_smod"] != comb(2 * g + 1, 2) + 3 * comb(2 * g + 1, 3)
          + 3 * comb(2 * g + 1, 4) - 1]
    euler = [f"g={g}" for g in genera
             if smod_euler(g) != -(2 ** (comb(2 * g + 1, 2) - 1)) * factorial(2 * g - 1)]
    quartic = [f"g={g}" for g in range(2, 21) if not closed_forms(g)["quartic_matches_bound"]]
    albanese = [f"g={w.g}" for w in albanese_range(7, 20) if not w.holds]
    tables = betti_tables()
    betti = [f"B_{m}[4]" for m in (3, 4) if tables[f"B_{m}[4]"].euler != 0]
    if level4_betti(3) != (1, 6, 5) or level4_betti(4) != (1, 21, 103, 83):
        betti.append("tables")
    return [
        _check("formulas.b1", b1),
        _check("formulas.euler", euler),
        _check("formulas.torelli_quartic", quartic, "constant -6"),
        _check("formulas.albanese", albanese, "g = 7..20"),
        _check("formulas.betti", betti, f"b3(Mod_2[4]) >= {tables['Mod_2[4]']['b3_min']}"),
    ]


Suite = Callable[..., list[CheckResult]]

SUITES: dict[str, Suite] = {
    "relations": relations_suite,
    "action": action_suite,
    "group": group_suite,
    "detection": detection_suite,
    "decomposition": decomposition_suite,
    "torsion": torsion_suite,
    "oracle": oracle_suite,
    "formulas": formulas_suite,
}


def suite_names() -> list[str]:
    return [*SUITES, "all"]


def run_suite(
    name: str,
    n: int,
    *,
    limits: Limits | None = None,
    seed: int | None = None,
    progress: bool = False,
) -> list[CheckResult]:
    """
    Run one suite, or every suite for "all".

    Under "all", a suite whose bound is exceeded by n is reported as skipped with
    `passed=None`; run alone, it raises.

    Example:
    ```python
    >>> all(r.passed for r in run_suite("relations", 4))
    True
    ```

    Raises:
        UnknownSuite: if `name` is not a suite.
        BoundExceeded: if a single suite is run with n above its bound.
    """
    limits = limits or Limits.from_env()
    seed = limits.seed if seed is None else seed
    if name != "all" and name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(suite_names())}")
    if n < 2:
        raise ValueError(f"suites need at least 2 strands, got {n}")
    if name != "all":
        results = SUITES[name](n, limits=limits, seed=seed, progress=progress)
    else:
        results = []
        for suite, fn in with_progress(SUITES.items(), progress=progress, total=len(SUITES), desc="verify"):
            try:
                results += fn(n, limits=limits, seed=seed, progress=False)
            except BoundExceeded as e:
                results.append(CheckResult(suite, None, f"skipped: {e}", skipped=True))
    failed = sum(r.passed is False for r in results)
    skipped = sum(r.skipped for r in results)
    logger.info("suite %s on n=%d: %d checks, %d failed, %d skipped", name, n, len(results), failed, skipped)
    return results

