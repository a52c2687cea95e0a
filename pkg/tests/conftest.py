"""
Minimal pytest fixtures for locmat tests.
Provides shared fields, seeded generators and small sample matrices.
"""

import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from locmat.models.fields import extension_field, prime_field, rationals
from locmat.models.permatrix import make

from test_data import ROTATION_BLOCK, TRANSVECTION_BLOCK


@pytest.fixture
def gf5():
    return prime_field(5)


@pytest.fixture
def gf7():
    return prime_field(7)


@pytest.fixture
def gf25():
    """GF(5^2) = GF(5)[t]/(t^2 - 2)."""
    return extension_field(5, 2)


@pytest.fixture
def q_field():
    return rationals()


@pytest.fixture
def rng():
    """Seeded generator so sampled tests are reproducible."""
    return np.random.default_rng(42)


@pytest.fixture
def rotation(gf5):
    """[[0, 1], [-1, 0]] over GF(5), period 2, det 1."""
    return make(gf5, 2, ROTATION_BLOCK)


@pytest.fixture
def upper_transvection(gf5):
    """t_12(1) at period 2 over GF(5)."""
    return make(gf5, 2, TRANSVECTION_BLOCK)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture(autouse=True)
def cleanup_env():
    """Clean up environment variables after each test."""
    yield
    for name in ('LOCMAT_SEED', 'LOCMAT_LOG_LEVEL'):
        if name in os.environ:
            del os.environ[name]


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests"
    )
    config.addinivalue_line(
        "markers", "unit: marks tests as unit tests"
    )
