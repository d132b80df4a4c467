from pathlib import Path

import pytest

from beireg import formats as fm

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def cl_borderline():
    """11-vertex interval-family intersection graph with ell=7 but 8
    maximal cliques (narrowly misses the characterization)."""
    return fm.load_graph(FIXTURES / "cl_borderline.json")


@pytest.fixture(scope="session")
def cl_example():
    """Valid variant of the same construction: ell = c = 7."""
    return fm.load_graph(FIXTURES / "cl_example.json")


@pytest.fixture(scope="session")
def wl_example():
    """13-vertex path + 6-clique + connectors graph: ell = n - omega + 1 = 8."""
    return fm.load_graph(FIXTURES / "wl_example.json")


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
