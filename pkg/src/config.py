"""Configuration management for the diffchow engine"""
import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError
from .models.ground import GroundMode
from .models.ring import RingDescriptor

DEFAULT_PRECISION = 16
DEFAULT_GUARD = 8
DEFAULT_MAX_ORDER = 2
DEFAULT_MAX_DEGREE = 8


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Config:
    """Engine configuration"""
    precision: int = DEFAULT_PRECISION
    guard: int = DEFAULT_GUARD
    max_order: int = DEFAULT_MAX_ORDER
    max_degree: int = DEFAULT_MAX_DEGREE
    seed: int = 0
    field: GroundMode = GroundMode.Q
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> 'Config':
        """Load configuration from environment variables (and a .env file if present)"""
        load_dotenv()

        field_name = os.getenv("DIFFCHOW_FIELD", GroundMode.Q.value)
        try:
            field = GroundMode.parse(field_name)
        except ValueError as e:
            raise ConfigError(str(e))

        return cls(
            precision=_int_env("DIFFCHOW_PRECISION", DEFAULT_PRECISION, minimum=1),
            guard=_int_env("DIFFCHOW_GUARD", DEFAULT_GUARD),
            max_order=_int_env("DIFFCHOW_MAX_ORDER", DEFAULT_MAX_ORDER),
            max_degree=_int_env("DIFFCHOW_MAX_DEGREE", DEFAULT_MAX_DEGREE, minimum=1),
            seed=_int_env("DIFFCHOW_SEED", 0),
            field=field,
            log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
        )


@dataclass(frozen=True)
class Session:
    """A ring declaration plus the validated flag set of one CLI invocation"""
    config: Config
    ring: Optional[RingDescriptor] = None
    pretty: bool = False

    def require_ring(self) -> RingDescriptor:
        if self.ring is None:
            raise ConfigError("no ring declared: pass --ring or start the input file with a 'ring' line")
        return self.ring

    def with_ring(self, ring: RingDescriptor) -> 'Session':
        return replace(self, ring=ring)
