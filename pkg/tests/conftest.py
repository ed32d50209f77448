"""Shared fixtures and hypothesis strategies for the gridrays test suite."""
from __future__ import annotations

import pytest
from hypothesis import strategies as st

from gridrays.construction import build_system
from gridrays.system import DOWN, LEFT, RaySystem

#: One line per acceptance criterion, filled in by tests/test_acceptance.py
#: and echoed after the run so the verdicts are visible in plain pytest output.
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


@st.composite
def ray_systems(draw, max_bound: int = 12) -> RaySystem:
    """Draw an arbitrary valid ray system.

    Every interior point gets an independently drawn parent choice; the
    axis points keep their forced choices (x = 0 goes down, y = 0 goes
    left).  This covers the full space of valid systems, not just the
    ones the deterministic construction produces.
    """
    bound = draw(st.integers(min_value=1, max_value=max_bound))
    rows: list[bytes] = [b""]
    for d in range(1, bound + 1):
        interior = draw(
            st.lists(
                st.sampled_from((DOWN, LEFT)),
                min_size=d - 1,
                max_size=d - 1,
            )
        )
        rows.append(bytes([DOWN, *interior, LEFT]))
    return RaySystem.from_rows(bound, rows)


def two_leaf_fixture() -> RaySystem:
    """A bound-5 tree where the rays of (1,3) and (2,1) do not prolong."""
    rows = [bytearray(r) for r in build_system(5).rows]
    rows[5][1] = 0  # (1,4) -> (0,4)
    rows[5][2] = 1  # (2,3) -> (2,2)
    rows[4][2] = 0  # (2,2) -> (1,2)
    rows[4][3] = 1  # (3,1) -> (3,0)
    return RaySystem.from_rows(5, [bytes(r) for r in rows])


def dead_pair_fixture() -> RaySystem:
    """A bound-8 tree where (2,2) and (3,1) both stop extending at 6."""
    rows = [bytearray(r) for r in build_system(8).rows]
    rows[5][3] = 0  # (3,2) -> (2,2)
    rows[5][4] = 1  # (4,1) -> (4,0)
    rows[6][3] = 0  # (3,3) -> (2,3)
    rows[6][4] = 1  # (4,2) -> (4,1)
    return RaySystem.from_rows(8, [bytes(r) for r in rows])


@pytest.fixture(scope="session")
def sys16() -> RaySystem:
    return build_system(16)


@pytest.fixture(scope="session")
def sys64() -> RaySystem:
    return build_system(64)


@pytest.fixture(scope="session")
def sys256() -> RaySystem:
    return build_system(256)
