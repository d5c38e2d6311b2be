"""Exceptions raised by level4_braids"""

from __future__ import annotations

__all__ = [
    "Level4Error",
    "BoundExceeded",
    "NotPure",
    "NotInStabilizer",
    "NotInSubgroup",
    "NonInvolutive",
    "CaseMismatch",
    "NotOnCentralComponent",
    "ShapeMismatch",
    "UnknownSuite",
    "ParseError",
    "ConjugationMismatch",
]


class Level4Error(Exception):
    """Base class for every domain error of the package."""


class BoundExceeded(Level4Error, ValueError):
    """A strand count or group size is above the configured limit."""

    def __init__(self, what: str, value: int, bound: int):
        self.what = what
        self.value = value
        self.bound = bound
        super().__init__(f"{what}={value} exceeds the configured bound {bound}")


class NotPure(Level4Error):
    """A braid word does not induce the trivial permutation."""


class NotInStabilizer(Level4Error):
    """A braid word does not stabilize the required pair subset."""


class NotInSubgroup(Level4Error):
    """A word does not lie in the level-4 subgroup."""


class NonInvolutive(Level4Error):
    """A matrix expected to square to the identity does not."""


class CaseMismatch(Level4Error):
    """Curve data does not fit the requested closed formula."""


class NotOnCentralComponent(Level4Error):
    """A torsion point lies on no component through the identity."""


class ShapeMismatch(Level4Error, ValueError):
    """Partition and cycle type have different sizes."""


class UnknownSuite(Level4Error):
    """The requested verification suite does not exist."""


class ParseError(Level4Error, ValueError):
    """Text could not be parsed into a word, symbol or expression."""


class ConjugationMismatch(Level4Error):
    """A conjugation table entry failed its Burau consistency check."""
