import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from zasym import _kernels  # noqa: E402
from zasym.partitions import Partition  # noqa: E402


@st.composite
def partitions(draw, max_weight=12):
    n = draw(st.integers(min_value=0, max_value=max_weight))
    parts = []
    remaining = n
    while remaining:
        p = draw(st.integers(min_value=1, max_value=min(remaining, parts[-1] if parts else remaining)))
        parts.append(p)
        remaining -= p
    return Partition(tuple(parts))


@pytest.fixture(params=["numba", "numpy"] if _kernels.HAVE_NUMBA else ["numpy"])
def backend(request, monkeypatch):
    monkeypatch.setattr(_kernels, "BACKEND", request.param)
    return request.param
