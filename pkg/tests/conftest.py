import importlib.util

import numpy as np
import pytest

from wtilde.kernels import get_backend

BACKENDS = ["numpy"] + (["numba"] if importlib.util.find_spec("numba") else [])

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=BACKENDS)
def backend(request):
    return get_backend(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
