"""Unit tests for runtime limits"""

from __future__ import annotations

import pytest

from level4_braids.config import *
from level4_braids.errors import BoundExceeded


class TestLimits:
    """Test defaults, validation and environment overrides"""
    def test_defaults(self):
        limits = Limits()
        assert (limits.enumeration, limits.oracle, limits.presentation) == (5, 4, 5)
        assert limits.max_elements == 150_000
        assert limits.seed == 0

    @pytest.mark.parametrize("kwargs", [{"oracle": -1}, {"seed": -3}])
    def test_negative(self, kwargs):
        with pytest.raises(ValueError):
            Limits(**kwargs)

    @pytest.mark.parametrize("kwargs", [{"oracle": 2.0}, {"enumeration": True}, {"seed": "1"}])
    def test_types(self, kwargs):
        with pytest.raises(TypeError):
            Limits(**kwargs)

    def test_frozen_and_hashable(self):
        limits = Limits()
        with pytest.raises(AttributeError):
            limits.oracle = 5
        assert hash(limits) == hash(Limits())

    def test_with_overrides(self):
        limits = Limits().with_overrides(oracle=3, seed=7)
        assert (limits.oracle, limits.seed, limits.enumeration) == (3, 7, 5)
        with pytest.raises(ValueError):
            Limits().with_overrides(oracle=-1)

    def test_from_env(self, monkeypatch):
        monkeypatch.setenv(MAX_ELEMENTS_ENV, "1000")
        assert Limits.from_env().max_elements == 1000
        assert Limits.from_env(max_elements=5).max_elements == 5
        assert Limits.from_env(seed=4).seed == 4

    def test_from_env_unset(self, monkeypatch):
        monkeypatch.delenv(MAX_ELEMENTS_ENV, raising=False)
        assert Limits.from_env() == Limits()

    def test_from_env_invalid(self, monkeypatch):
        monkeypatch.setenv(MAX_ELEMENTS_ENV, "lots")
        with pytest.raises(ValueError, match=MAX_ELEMENTS_ENV):
            Limits.from_env()


class TestCheckBound:
    """Test the bound check"""
    def test_within(self):
        check_bound("n", 4, 4)

    def test_exceeded(self):
        with pytest.raises(BoundExceeded) as info:
            check_bound("n", 6, 5)
        assert (info.value.what, info.value.value, info.value.bound) == ("n", 6, 5)
        assert isinstance(info.value, ValueError)
