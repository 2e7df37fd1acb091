from pathlib import Path

import pytest

from javamap.parser import parse_project

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def minishapes():
    """(model, units, diagnostics) for the MiniShapes corpus."""
    return parse_project(FIXTURES / "minishapes", "MiniShapes")


@pytest.fixture(scope="session")
def basethread():
    return parse_project(FIXTURES / "basethread", "Mobile photo software")
