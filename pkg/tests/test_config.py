import pytest

from src.config import DEFAULT_PRECISION, Config, Session
from src.errors import ConfigError
from src.models.ground import GroundMode
from src.models.ring import RingDescriptor

VARIABLES = ("DIFFCHOW_PRECISION", "DIFFCHOW_GUARD", "DIFFCHOW_MAX_ORDER", "DIFFCHOW_MAX_DEGREE",
             "DIFFCHOW_SEED", "DIFFCHOW_FIELD", "LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    config = Config.from_env()
    assert config == Config()
    assert config.precision == DEFAULT_PRECISION
    assert config.field == GroundMode.Q


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DIFFCHOW_PRECISION", "32")
    monkeypatch.setenv("DIFFCHOW_FIELD", "qx")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    config = Config.from_env()
    assert (config.precision, config.field, config.log_level) == (32, GroundMode.QX, "DEBUG")


@pytest.mark.parametrize("name,value", [
    ("DIFFCHOW_PRECISION", "many"),
    ("DIFFCHOW_PRECISION", "0"),
    ("DIFFCHOW_GUARD", "-1"),
    ("DIFFCHOW_FIELD", "R"),
])
def test_invalid_values_raise(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        Config.from_env()


def test_session_requires_a_ring():
    session = Session(Config())
    with pytest.raises(ConfigError):
        session.require_ring()
    ring = RingDescriptor(y_count=2)
    assert session.with_ring(ring).require_ring() == ring
