"""2-torsion points on the characteristic varieties of the braid arrangement"""

from __future__ import annotations

__all__ = [
    "ComponentKind",
    "Component",
    "TorsionPoint",
    "twisted_h1_dimension",
    "torsion_points",
    "torsion_coordinates",
    "on_component",
    "cohen_suciu_membership",
    "torsion_report",
]

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb, prod

from level4_braids.braids import PairSubset
from level4_braids.config import Limits, check_bound
from level4_braids.errors import NotOnCentralComponent
from level4_braids.reps.isotypic import IsotypicReport, isotypic_decomposition
from level4_braids.reps.modules import H1Module
from level4_braids.utils import Pair, all_pairs, with_progress

logger = logging.getLogger(__name__)


class ComponentKind(str, Enum):
    IDENTITY = "identity"
    TRIPLE = "triple"
    QUADRUPLE = "quadruple"


@dataclass(frozen=True, slots=True)
class Component:
    """A component through 1 of the first characteristic variety, named by its strands."""
    kind: ComponentKind
    strands: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        if self.kind is ComponentKind.IDENTITY:
            return "1"
        return "V(" + ",".join(map(str, self.strands)) + ")"


@dataclass(frozen=True, slots=True)
class TorsionPoint:
    subset: PairSubset
    dimension: int
    component: Component

    def to_dict(self) -> dict:
        return {"I": [list(p) for p in self.subset], "dim": self.dimension,
                "component": str(self.component)}


def twisted_h1_dimension(n: int, I: PairSubset, report: IsotypicReport | None = None) -> int:
    """dim H^1(X_n; C_ρ_I), the number of copies of V_I in H_1(B_n[4]; C)."""
    if I.n != n:
        raise ValueError(f"pair subset on {I.n} strands, expected {n}")
    report = report or isotypic_decomposition(H1Module(n))
    return report.multiplicity(I)


def torsion_points(
    n: int,
    d: int = 1,
    *,
    report: IsotypicReport | None = None,
    limits: Limits | None = None,
    progress: bool = False,
    **tqdm_kw,
) -> list[PairSubset]:
    """
    Every nonempty I with dim H^1(X_n; C_ρ_I) >= d, scanning all 2^{C(n,2)} subsets.

    Example:
    ```python
    >>> len(torsion_points(4, 1))
    15
    >>> torsion_points(4, 2)
    []
    ```

    Args:
        n (int): Strand count.
        d (int): Depth of the characteristic variety. Defaults to 1.
        report (IsotypicReport, optional): Precomputed decomposition of H_1.
        limits (Limits, optional): Bounds; n may not exceed the enumeration bound.
        progress (bool): Show a progress bar over subsets. Defaults to False.
        **tqdm_kw: Additional keyword arguments to pass to `tqdm`.

    Raises:
        BoundExceeded: if n is above the configured enumeration bound.
    """
    limits = limits or Limits.from_env()
    check_bound("n", n, limits.enumeration)
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    report = report or isotypic_decomposition(H1Module(n))
    pairs = all_pairs(n)
    total = 2 ** comb(n, 2)
    found = []
    for mask in with_progress(range(1, total), progress=progress, total=total - 1,
                              desc=f"torsion n={n}", **tqdm_kw):
        I = PairSubset(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        if report.multiplicity(I) >= d:
            found.append(I)
    logger.info("n=%d, d=%d: %d torsion points", n, d, len(found))
    return sorted(found)


def torsion_coordinates(I: PairSubset) -> dict[Pair, int]:
    """The point ρ_I: t_pq = -1 for {p,q} in I and +1 otherwise."""
    return {p: -1 if p in I else 1 for p in all_pairs(I.n)}


def on_component(t: dict[Pair, int], component: Component) -> bool:
    """Check the defining equations of `component` at the point `t`."""
    if component.kind is ComponentKind.IDENTITY:
        return all(v == 1 for v in t.values())
    inside = set(component.strands)
    if any(v != 1 for p, v in t.items() if not set(p) <= inside):
        return False
    if component.kind is ComponentKind.TRIPLE:
        i, j, k = component.strands
        return t[(i, j)] * t[(i, k)] * t[(j, k)] == 1
    i, j, k, l = component.strands
    matched = t[(i, j)] == t[(k, l)] and t[(i, k)] == t[(j, l)] and t[(i, l)] == t[(j, k)]
    return matched and prod(t[p] for p in combinations(component.strands, 2)) == 1


def cohen_suciu_membership(I: PairSubset) -> Component:
    """
    The component V_ijk or V_ijkl through 1 containing ρ_I; ρ_∅ gives the identity.

    Triples are tried before quadruples, each in lexicographic order.

    Example:
    ```python
    >>> str(cohen_suciu_membership(I3(4)))
    'V(1,2,3)'
    ```

    Raises:
        NotOnCentralComponent: if no component's equations hold at ρ_I.
    """
    t = torsion_coordinates(I)
    if not I.pairs:
        return Component(ComponentKind.IDENTITY)
    for size, kind in ((3, ComponentKind.TRIPLE), (4, ComponentKind.QUADRUPLE)):
        for strands in combinations(range(1, I.n + 1), size):
            component = Component(kind, strands)
            if on_component(t, component):
                return component
    raise NotOnCentralComponent(f"ρ_{I} lies on no triple or quadruple component")


def torsion_report(n: int, d: int = 1, **kw) -> list[TorsionPoint]:
    """`torsion_points` with the dimension and component of each point."""
    report = kw.pop("report", None) or isotypic_decomposition(H1Module(n))
    return [TorsionPoint(I, report.multiplicity(I), cohen_suciu_membership(I))
            for I in torsion_points(n, d, report=report, **kw)]
