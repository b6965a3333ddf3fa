"""Shared fixtures: seeded bundles, on-disk stores, and canned context texts."""
from __future__ import annotations

import pytest

from slangfilter import persist_store, seed_bundle

# One text per concept; the trailing words are elongated/prefixed respellings
# of lexicon words that only the sliding-window stage can catch.
MOVIE_TEXT = (
    "The actor and the director loved that film kalphaa bbbbetaa gaaaamaa deeeeltaa"
)
SPORTS_TEXT = (
    "The player hit the cricket ball across the ground "
    "eeeeepsilon lambdddaaa uuuppppsilon"
)
MOVIE_WORDS = ("kalphaa", "bbbbetaa", "gaaaamaa", "deeeeltaa")
SPORTS_WORDS = ("eeeeepsilon", "lambdddaaa", "uuuppppsilon")


@pytest.fixture
def bundle():
    return seed_bundle()


@pytest.fixture
def store_dir(tmp_path):
    directory = tmp_path / "store"
    persist_store(seed_bundle(), directory)
    return directory


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one PASS/FAIL line per acceptance criterion as it finishes."""
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or item.fspath.basename != "test_acceptance.py":
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    status = "PASS" if report.passed else "FAIL"
    reporter = item.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line(f"acceptance {status}: {doc}")
