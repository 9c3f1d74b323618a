import pytest

from gramcalc import config


@pytest.fixture(autouse=True)
def _fresh_caps():
    """Keep cap overrides from leaking between tests."""
    config.reset_caps()
    yield
    config.reset_caps()
