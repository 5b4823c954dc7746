"""Ring descriptors: which indeterminates exist and over which ground field"""
import re
from dataclasses import dataclass, replace
from typing import Any, Dict, FrozenSet, List, Optional

from ..errors import ParseError
from .ground import GroundField, GroundMode, ground_field
from .variables import BaseVar, Family

_U_SHAPE = re.compile(r"^(\d+)(?:x(\d+))?$")
_PARAM_NAME = re.compile(r"^s(\d*)$")


@dataclass(frozen=True)
class RingDescriptor:
    """Variable families, their arities and the ground field mode"""
    y_count: int = 0
    u_blocks: int = 0
    u_width: int = 0
    param_count: int = 0
    constant_params: FrozenSet[int] = frozenset()
    field: GroundMode = GroundMode.Q
    scaling: bool = False

    def __post_init__(self):
        if min(self.y_count, self.u_blocks, self.u_width, self.param_count) < 0:
            raise ValueError("ring arities must be non-negative")
        if self.u_blocks and not self.u_width:
            object.__setattr__(self, "u_width", self.y_count)
        bad = [i for i in self.constant_params if i >= self.param_count]
        if bad:
            raise ValueError(f"constant parameter index {bad[0]} exceeds S={self.param_count}")

    @property
    def ground(self) -> GroundField:
        return ground_field(self.field)

    @property
    def n(self) -> int:
        """Projective dimension of the Y block, n = y_count - 1"""
        return self.y_count - 1

    @classmethod
    def parse(cls, text: str, default_field: Optional[GroundMode] = None) -> 'RingDescriptor':
        """Parse `ring Y=3 U=2x3 S=1 const=s0 field=Qx` (the `ring` keyword is optional)"""
        tokens = text.split()
        if tokens and tokens[0] == "ring":
            tokens = tokens[1:]
        values: Dict[str, Any] = {}
        if default_field is not None:
            values["field"] = default_field
        constants: List[int] = []
        for token in tokens:
            key, sep, value = token.partition("=")
            if not sep or not value:
                raise ParseError(f"malformed ring declaration item {token!r}")
            key = key.strip()
            try:
                if key == "Y":
                    values["y_count"] = int(value)
                elif key == "U":
                    match = _U_SHAPE.match(value)
                    if not match:
                        raise ParseError(f"malformed U block shape {value!r}; expected BLOCKS or BLOCKSxWIDTH")
                    values["u_blocks"] = int(match.group(1))
                    if match.group(2):
                        values["u_width"] = int(match.group(2))
                elif key == "S":
                    values["param_count"] = int(value)
                elif key == "T":
                    raise ParseError("the scaling indeterminate t is reserved and cannot be declared")
                elif key == "const":
                    for name in value.split(","):
                        constants.append(_param_index(name))
                elif key == "field":
                    values["field"] = GroundMode.parse(value)
                else:
                    raise ParseError(f"unknown ring declaration key {key!r}")
            except ValueError as e:
                if isinstance(e, ParseError):
                    raise
                raise ParseError(f"invalid ring declaration item {token!r}: {e}")
        values["constant_params"] = frozenset(constants)
        try:
            return cls(**values)
        except ValueError as e:
            raise ParseError(str(e))

    def render(self) -> str:
        parts = [f"Y={self.y_count}"]
        if self.u_blocks:
            parts.append(f"U={self.u_blocks}x{self.u_width}")
        if self.param_count:
            parts.append(f"S={self.param_count}")
        if self.constant_params:
            parts.append("const=" + ",".join(f"s{i}" for i in sorted(self.constant_params)))
        if self.scaling:
            parts.append("T=1")
        parts.append(f"field={self.field.value}")
        return "ring " + " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def contains(self, base: BaseVar) -> bool:
        if base.family == Family.Y:
            return base.block_index == 0 and 0 <= base.var_index < self.y_count
        if base.family == Family.U:
            return 0 <= base.block_index < self.u_blocks and 0 <= base.var_index < self.u_width
        if base.family == Family.T:
            return self.scaling and base.block_index == 0 and base.var_index == 0
        return base.block_index == 0 and 0 <= base.var_index < self.param_count

    def is_constant(self, base: BaseVar) -> bool:
        return base.family == Family.PARAM and base.var_index in self.constant_params

    def contains_ring(self, other: 'RingDescriptor') -> bool:
        return (
            self.field == other.field
            and self.y_count >= other.y_count
            and (other.u_blocks == 0 or (self.u_blocks >= other.u_blocks and self.u_width >= other.u_width))
            and self.param_count >= other.param_count
            and self.constant_params.intersection(range(other.param_count)) == other.constant_params
            and (self.scaling or not other.scaling)
        )

    def y_vars(self) -> List[BaseVar]:
        return [BaseVar(Family.Y, 0, j) for j in range(self.y_count)]

    def u_block(self, block: int) -> List[BaseVar]:
        return [BaseVar(Family.U, block, j) for j in range(self.u_width)]

    def params(self) -> List[BaseVar]:
        return [BaseVar(Family.PARAM, 0, j) for j in range(self.param_count)]

    def base_vars(self) -> List[BaseVar]:
        result = self.params()
        if self.scaling:
            result.append(BaseVar(Family.T, 0, 0))
        for block in range(self.u_blocks):
            result.extend(self.u_block(block))
        result.extend(self.y_vars())
        return result

    def with_scaling(self) -> 'RingDescriptor':
        return replace(self, scaling=True)

    def with_u_blocks(self, blocks: int, width: Optional[int] = None) -> 'RingDescriptor':
        return replace(self, u_blocks=blocks, u_width=width if width is not None else (self.u_width or self.y_count))

    def with_params(self, count: int, constants: FrozenSet[int] = frozenset()) -> 'RingDescriptor':
        return replace(self, param_count=count, constant_params=frozenset(constants))

    def with_y_count(self, count: int) -> 'RingDescriptor':
        return replace(self, y_count=count)

    def with_field(self, mode: GroundMode) -> 'RingDescriptor':
        return replace(self, field=mode)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'y_count': self.y_count,
            'u_blocks': self.u_blocks,
            'u_width': self.u_width,
            'param_count': self.param_count,
            'constant_params': sorted(self.constant_params),
            'field': self.field.value,
            'scaling': self.scaling,
        }


def _param_index(name: str) -> int:
    match = _PARAM_NAME.match(name.strip())
    if not match:
        raise ParseError(f"malformed parameter name {name!r}")
    return int(match.group(1) or 0)
