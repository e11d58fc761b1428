import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from unsharp.examples import ex1, ex2  # noqa: E402


@pytest.fixture(scope="session")
def E1():
    return ex1()


@pytest.fixture(scope="session")
def E2():
    return ex2()


@pytest.fixture(scope="session")
def census():
    return json.loads((HERE / "fixtures" / "census.json").read_text())


def golden(name: str) -> str:
    return (HERE / "golden" / name).read_text()
