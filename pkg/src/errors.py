"""Exception hierarchy for the differential algebra engine"""
from typing import Any, Dict, Optional


class DiffChowError(Exception):
    """Base class for every domain error raised by the engine"""

    code = "domain_error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form used by the CLI"""
        payload: Dict[str, Any] = {"error": self.code, "detail": self.message}
        if self.details:
            payload["context"] = {key: _jsonable(value) for key, value in self.details.items()}
        return payload


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return str(value)


class ConfigError(DiffChowError, ValueError):
    code = "config_error"


class InputFileError(DiffChowError):
    code = "file_not_found"


class ParseError(DiffChowError, ValueError):
    code = "parse_error"

    def __init__(self, message: str, position: Optional[int] = None, **details: Any):
        if position is not None:
            message = f"{message} (at position {position})"
            details["position"] = position
        super().__init__(message, **details)
        self.position = position


class UnknownVariableError(ParseError):
    code = "unknown_variable"


class OrderOverflowError(ParseError):
    code = "order_overflow"


class RingMismatchError(DiffChowError, ValueError):
    code = "ring_mismatch"


class GroundElementError(DiffChowError, ValueError):
    code = "ground_element"


class DivisionByZeroError(DiffChowError, ZeroDivisionError):
    code = "division_by_zero"


class PrecisionError(DiffChowError):
    code = "insufficient_precision"


class UnitIdealError(DiffChowError):
    code = "unit_ideal"


class HomogeneityError(DiffChowError):
    code = "not_homogeneous"


class PreconditionError(DiffChowError, ValueError):
    code = "precondition"


class RankingError(DiffChowError, ValueError):
    code = "ranking"


class SplittingAmbiguityError(DiffChowError):
    code = "splitting_ambiguity"


class EliminationError(DiffChowError):
    code = "elimination_failed"


class UnsupportedVarietyError(DiffChowError, ValueError):
    code = "unsupported_variety"


class InconclusiveError(DiffChowError):
    code = "inconclusive"


class EngineInvariantError(DiffChowError, AssertionError):
    """A check that the theory predicts always passes has failed"""

    code = "engine_invariant"
