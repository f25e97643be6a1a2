"""Shared fixtures: repo paths and canned scenarios."""

from pathlib import Path

import pytest

from dubinsplan import Scenario, load_scenario

REPO = Path(__file__).resolve().parent.parent
SCENARIOS = REPO / "scenarios"


@pytest.fixture(scope="session")
def maze_path() -> Path:
    return SCENARIOS / "maze.json"


@pytest.fixture(scope="session")
def maze_scenario(maze_path) -> Scenario:
    return load_scenario(maze_path)


@pytest.fixture(scope="session")
def block_scenario() -> Scenario:
    return load_scenario(SCENARIOS / "block.json")


@pytest.fixture(scope="session")
def forest_scenario() -> Scenario:
    return load_scenario(SCENARIOS / "forest.json")
