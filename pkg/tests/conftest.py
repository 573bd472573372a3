import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-big",
        action="store_true",
        default=False,
        help="run the length-32 smoke test (minutes of runtime, ~1 GiB RSS)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-big"):
        return
    skip_big = pytest.mark.skip(reason="opt-in: pass --run-big")
    for item in items:
        if "big" in item.keywords:
            item.add_marker(skip_big)
