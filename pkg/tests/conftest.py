import pytest

from quineset import BuildConfig, build


@pytest.fixture
def default_build():
    return build(BuildConfig(("u", "v"), depth=3))


@pytest.fixture
def default_universe(default_build):
    return default_build[0]


@pytest.fixture
def three_atom_universe():
    return build(BuildConfig(("o", "a", "e"), depth=2))[0]


@pytest.fixture
def shallow_universe():
    return build(BuildConfig(("u", "v"), depth=2))[0]
