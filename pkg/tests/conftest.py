import pathlib
import sys

import pytest

# allow running the suite from a fresh checkout without installing
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from quivercount.mutation_class import (  # noqa: E402
    enumerate_class,
    seed_cycle,
    seed_dynkin_d,
)


@pytest.fixture(scope="session")
def cycle_class():
    """Memoized access to enumerated annular classes, shared by the suite."""
    cache = {}

    def get(r, s):
        if (r, s) not in cache:
            cache[r, s] = enumerate_class(seed_cycle(r, s))
        return cache[r, s]

    return get


@pytest.fixture(scope="session")
def dynkin_class():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_class(seed_dynkin_d(n))
        return cache[n]

    return get


@pytest.fixture
def data_dir():
    return pathlib.Path(__file__).resolve().parent / "data"
