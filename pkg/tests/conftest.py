#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Shared fixtures: seeded random generator, analysis options and an isolated
configuration environment.
"""

import os

import numpy as np
import pytest

from core.irreducibility import Policy
from core.monogenity import AnalysisOptions

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


@pytest.fixture
def strict_options():
    return AnalysisOptions(policy=Policy.REQUIRE_CERTIFICATE)


@pytest.fixture
def assume_options():
    return AnalysisOptions(policy=Policy.ASSUME)


@pytest.fixture
def isolated_env(monkeypatch, tmp_path):
    """
    No user configuration file and no budget override from the environment.

    Returns:
        Path of a configuration file that does not exist
    """
    monkeypatch.delenv("MONOCHECK_FACTOR_BUDGET", raising=False)
    return str(tmp_path / "monocheck.json")


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
