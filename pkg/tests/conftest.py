import os

import hypothesis
import pytest

from levikit import catalog
from levikit.config import LeviKitConfig

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=50, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture
def run_config() -> LeviKitConfig:
    return LeviKitConfig()


@pytest.fixture
def sl2():
    return catalog.get_entry("sl2")


@pytest.fixture
def gl2():
    return catalog.get_entry("gl2")


@pytest.fixture
def sl2_sd_v2():
    return catalog.get_entry("sl2_sd_v2")


@pytest.fixture
def skewed():
    return catalog.get_entry("sl2_sd_v2_skewed")


@pytest.fixture
def sl2_sd_h3():
    return catalog.get_entry("sl2_sd_h3")


@pytest.fixture
def heisenberg():
    return catalog.get_entry("heisenberg3")
