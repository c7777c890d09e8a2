import pytest

from mersenne_octonions.verify import GridConfig, run_grid


@pytest.fixture(scope="session")
def default_report():
    """One full default-grid verification run, shared across tests."""
    return run_grid(GridConfig())
