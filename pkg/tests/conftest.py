from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402
from mapoly.maps import HalfEdge, Map  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "src" / "mapoly" / "data"

@st.composite
def maps(draw, max_vertices=4, max_edges=6, min_edges=0):
    """Rotation systems with random vertex count, edge directions and rotations."""
    e = draw(st.integers(min_edges, max_edges))
    v = draw(st.integers(1, max_vertices))
    darts = [HalfEdge(i, end) for i in range(1, e + 1) for end in "+-"]
    order = draw(st.permutations(darts))
    owners = draw(st.lists(st.integers(0, v - 1), min_size=2 * e, max_size=2 * e))
    rotations = [[] for _ in range(v)]
    for h, o in zip(order, owners):
        rotations[o].append(h)
    return Map(rotations)


@pytest.fixture
def data_dir() -> Path:
    return DATA


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
