"""Pytest configuration"""

from __future__ import annotations

import numpy as np
import pytest

from level4_braids.braids import ZnTable, enumerate_zn
from level4_braids.config import Limits
from level4_braids.oracle import OracleH1
from level4_braids.reps import H1Module, IsotypicReport, isotypic_decomposition


@pytest.fixture(scope="session")
def limits() -> Limits:
    return Limits()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)


@pytest.fixture(scope="session")
def zn3(limits) -> ZnTable:
    return enumerate_zn(3, limits=limits)


@pytest.fixture(scope="session")
def zn4(limits) -> ZnTable:
    return enumerate_zn(4, limits=limits)


@pytest.fixture(scope="session")
def isotypic4() -> IsotypicReport:
    return isotypic_decomposition(H1Module(4))


@pytest.fixture(scope="session")
def oracle3(limits) -> OracleH1:
    """The presentation oracle on three strands; cheap enough for every run."""
    return OracleH1(3, limits=limits)


@pytest.fixture(scope="session")
def oracle4(limits) -> OracleH1:
    """
    The oracle on four strands: 2^6 cosets and 321 Schreier generators.
    Only requested by tests marked slow.
    """
    return OracleH1(4, limits=limits)


@pytest.fixture(scope="session")
def isotypic5() -> IsotypicReport:
    """The PZ_5 split of the 55-dimensional H_1; only requested by tests marked slow."""
    return isotypic_decomposition(H1Module(5))
