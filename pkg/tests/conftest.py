import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="run the long exhaustive verifications as well",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="long-running; pass --slow to include")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
