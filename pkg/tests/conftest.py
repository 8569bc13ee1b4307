"""Shared pytest setup for the tatezeta tests."""


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size runs (deselect with -m 'not slow')")
