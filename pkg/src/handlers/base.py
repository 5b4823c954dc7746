"""Shared input handling for the command handlers"""
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ..algebra.parser import parse, parse_ground
from ..config import Session
from ..errors import InputFileError, PreconditionError
from ..models.charset import CharSet
from ..models.ground import GroundMode
from ..models.polynomial import DiffPolynomial
from ..models.ring import RingDescriptor
from ..models.series import DiffPoint
from ..models.variety import VarietySpec
from ..reduction.charset import asserted_charset
from ..reduction.ranking import Ranking

logger = logging.getLogger(__name__)


def read_lines(path: str) -> List[str]:
    """Non-empty lines of a UTF-8 input file with `#` comments removed"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputFileError(f"input file {path!r} not found", path=path)
    except OSError as e:
        raise InputFileError(f"cannot read {path!r}: {e}", path=path)
    lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def expand_inputs(values: Optional[Sequence[str]], separator: Optional[str] = None) -> Tuple[Optional[str], List[str]]:
    """Inline strings and @file references, returning a `ring` line found in a file and the items"""
    ring_line = None
    items: List[str] = []
    for value in values or ():
        if value.startswith("@"):
            for line in read_lines(value[1:]):
                if line.split(None, 1)[0] == "ring":
                    ring_line = line
                else:
                    items.append(line)
        elif separator:
            items.extend(piece.strip() for piece in value.split(separator) if piece.strip())
        else:
            items.append(value)
    return ring_line, items


class BaseHandlers:
    """Turns command-line arguments into engine inputs for one session"""

    def __init__(self, session: Session):
        self.session = session

    @property
    def config(self):
        return self.session.config

    @property
    def field(self) -> GroundMode:
        if self.session.ring is not None:
            return self.session.ring.field
        return self.config.field

    def _adopt_ring(self, ring_line: Optional[str]) -> None:
        if ring_line and self.session.ring is None:
            self.session = self.session.with_ring(RingDescriptor.parse(ring_line, self.config.field))
            logger.info(f"ring taken from input file: {self.session.ring.render()}")

    def polynomials(self, values: Optional[Sequence[str]]) -> List[DiffPolynomial]:
        ring_line, items = expand_inputs(values)
        self._adopt_ring(ring_line)
        ring = self.session.require_ring()
        return [parse(item, ring) for item in items]

    def polynomial(self, values: Optional[Sequence[str]]) -> DiffPolynomial:
        result = self.polynomials(values)
        if len(result) != 1:
            raise PreconditionError(f"expected exactly one polynomial, got {len(result)}")
        return result[0]

    def ranking(self, text: Optional[str]) -> Ranking:
        return Ranking.parse(text or "orderly", self.session.require_ring())

    def charset(self, values: Optional[Sequence[str]], ranking_text: Optional[str]) -> CharSet:
        """An asserted characteristic set from --charset values (`;` separates inline elements)"""
        ring_line, items = expand_inputs(values, separator=";")
        self._adopt_ring(ring_line)
        ring = self.session.require_ring()
        if not items:
            raise PreconditionError("no characteristic set given; pass --charset")
        return asserted_charset([parse(item, ring) for item in items], self.ranking(ranking_text))

    def variety(self, text: Optional[str]) -> VarietySpec:
        if not text:
            raise PreconditionError("no variety given; pass --variety")
        if text.startswith("@"):
            lines = read_lines(text[1:])
            if len(lines) != 1:
                raise PreconditionError(f"{text[1:]} must hold exactly one variety line")
            text = lines[0]
        return VarietySpec.parse(text)

    def point(self, text: Optional[str]) -> DiffPoint:
        """Comma-separated elements of Q(x), expanded as series at x = 0"""
        if not text:
            raise PreconditionError("no point given; pass --point")
        values = [parse_ground(piece, GroundMode.QX) for piece in text.split(",")]
        return DiffPoint.of(values, self.config.precision, GroundMode.QX)
