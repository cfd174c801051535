from collections import Counter

import pytest
from hypothesis import strategies as st

from hookcontent import _backend

BACKENDS = ["python"]
try:
    from hookcontent import _kernels  # noqa: F401
except ImportError:
    pass
else:
    BACKENDS.append("cython")


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@st.composite
def partitions(draw, max_cells=10):
    n = draw(st.integers(min_value=0, max_value=max_cells))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


def active_backend():
    return _backend.BACKEND


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
