"""Shared test fixtures."""

import pytest

from starconf.config import DEFAULT_SEED
from starconf.polyring import RingContext
from starconf.starconfig import StarConfigSpec, build


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep the developer's STARCONF_* settings out of every test."""
    for key in (
        "STARCONF_SEED",
        "STARCONF_PRIME",
        "STARCONF_OUTPUT_DIR",
        "STARCONF_VERBOSE",
        "STARCONF_WORKERS",
        "STARCONF_GRID",
    ):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr("starconf.config.load_dotenv", lambda *args, **kwargs: False)


@pytest.fixture
def p2():
    return RingContext.projective(2)


@pytest.fixture
def star():
    """Factory: build a star ideal on the default seed."""

    def make(n, r, degrees, stream=0, **kwargs):
        spec = StarConfigSpec(n=n, r=r, degrees=tuple(degrees), seed=DEFAULT_SEED, stream=stream, **kwargs)
        return build(spec)

    return make
