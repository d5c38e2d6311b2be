"""Runtime limits for enumerations and the presentation oracle"""

from __future__ import annotations

__all__ = [
    "Limits",
    "MAX_ELEMENTS_ENV",
    "check_bound",
]

import os
from dataclasses import dataclass, field, replace

from level4_braids.errors import BoundExceeded

MAX_ELEMENTS_ENV = "LEVEL4_BRAIDS_MAX_ELEMENTS"


@dataclass(frozen=True, slots=True, init=False)
class Limits:
    """
    Bounds applied before expensive computations start.

    Example:
    ```python
    >>> Limits().enumeration
    5
    >>> Limits(enumeration=6).enumeration
    6
    ```

    Args:
        enumeration (int): Largest n for which Z_n is enumerated. Defaults to 5.
        oracle (int): Largest n for the Reidemeister-Schreier oracle. Defaults to 4.
        presentation (int): Largest n for the pure braid presentation. Defaults to 5.
        max_elements (int): Largest group order held in memory. Defaults to 150_000.
        seed (int): Default seed for random checks. Defaults to 0.
    """
    enumeration: int = field()
    oracle: int = field()
    presentation: int = field()
    max_elements: int = field()
    seed: int = field()

    def __init__(
        self,
        enumeration: int = 5,
        oracle: int = 4,
        presentation: int = 5,
        max_elements: int = 150_000,
        seed: int = 0,
    ):
        for name, value in (
            ("enumeration", enumeration),
            ("oracle", oracle),
            ("presentation", presentation),
            ("max_elements", max_elements),
            ("seed", seed),
        ):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be int, got {type(value).__name__}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
        object.__setattr__(self, "enumeration", enumeration)
        object.__setattr__(self, "oracle", oracle)
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "max_elements", max_elements)
        object.__setattr__(self, "seed", seed)

    @classmethod
    def from_env(cls, **overrides: int) -> Limits:
        """Defaults, with the element cap taken from the environment when set."""
        raw = os.environ.get(MAX_ELEMENTS_ENV)
        if raw is not None and "max_elements" not in overrides:
            try:
                overrides["max_elements"] = int(raw)
            except ValueError as e:
                raise ValueError(
                    f"{MAX_ELEMENTS_ENV} must be an integer, got {raw!r}"
                ) from e
        return cls(**overrides)

    def with_overrides(self, **changes: int) -> Limits:
        return replace(self, **changes)


def check_bound(what: str, value: int, bound: int) -> None:
    if value > bound:
        raise BoundExceeded(what, value, bound)
