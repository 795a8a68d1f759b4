import json
from pathlib import Path

import pytest

from triaxis.scenario import Scenario, load_scenario_file

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"
FIXTURE_PATHS = {
    "reference": SCENARIO_DIR / "reference.json",
    "infeasible_thresholds": SCENARIO_DIR / "infeasible_thresholds.json",
    "wta_market": SCENARIO_DIR / "wta_market.json",
}


@pytest.fixture(scope="session")
def reference_path() -> Path:
    return FIXTURE_PATHS["reference"]


@pytest.fixture(scope="session")
def reference_scenario() -> Scenario:
    return load_scenario_file(str(FIXTURE_PATHS["reference"]))


@pytest.fixture(scope="session")
def reference_document() -> dict:
    return json.loads(FIXTURE_PATHS["reference"].read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def infeasible_path() -> Path:
    return FIXTURE_PATHS["infeasible_thresholds"]


@pytest.fixture(scope="session")
def wta_path() -> Path:
    return FIXTURE_PATHS["wta_market"]
