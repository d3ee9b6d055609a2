import pytest

from coxvol.report import RunConfig, table


@pytest.fixture(scope="session")
def volume_table():
    """The five component reports plus totals, computed once per session."""
    return table(RunConfig())
