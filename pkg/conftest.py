"""Shared fixtures; the repository root is on sys.path so tests import `core` directly."""

import numpy as np
import pytest

from core.config import SpectraConfig


@pytest.fixture
def quick_config() -> SpectraConfig:
    return SpectraConfig.quick(rng_seed=1234, max_workers=2)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20181)


@pytest.fixture
def edge_file(tmp_path):
    """Write an edge list to a temp file and return its path."""
    def _write(text: str, name: str = "edges.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
