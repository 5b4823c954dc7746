"""Differential indeterminates and their derivatives"""
from dataclasses import dataclass
from enum import IntEnum


class Family(IntEnum):
    """Indeterminate blocks; the integer value is the display precedence"""
    PARAM = 0
    T = 1
    U = 2
    Y = 3


@dataclass(frozen=True, order=True)
class BaseVar:
    """A differential indeterminate such as y_j or u_ij"""
    family: Family
    block_index: int
    var_index: int

    def derivative(self, order: int = 0) -> 'DerivVar':
        return DerivVar(self.family, self.block_index, self.var_index, order)

    @property
    def name(self) -> str:
        if self.family == Family.Y:
            return f"y{self.var_index}"
        if self.family == Family.U:
            if self.block_index < 10 and self.var_index < 10:
                return f"u{self.block_index}{self.var_index}"
            return f"u{self.block_index}_{self.var_index}"
        if self.family == Family.T:
            return "t"
        return f"s{self.var_index}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class DerivVar:
    """The derivative of order `order` of a differential indeterminate"""
    family: Family
    block_index: int
    var_index: int
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"derivative order must be non-negative, got {self.order}")

    @property
    def base(self) -> BaseVar:
        return BaseVar(self.family, self.block_index, self.var_index)

    def shifted(self, times: int = 1) -> 'DerivVar':
        return DerivVar(self.family, self.block_index, self.var_index, self.order + times)

    def is_derivative_of(self, other: 'DerivVar') -> bool:
        """True when self = δ^e(other) for some e >= 0"""
        return self.base == other.base and self.order >= other.order

    @property
    def name(self) -> str:
        base = self.base.name
        if self.order == 0:
            return base
        if self.order <= 2:
            return base + "'" * self.order
        return f"{base}^({self.order})"

    def display_key(self) -> tuple:
        # families in blocks, orderly inside a block
        return (int(self.family), self.block_index, self.order, self.var_index)

    def __str__(self) -> str:
        return self.name


def y(index: int, order: int = 0) -> DerivVar:
    return DerivVar(Family.Y, 0, index, order)


def u(block: int, index: int, order: int = 0) -> DerivVar:
    return DerivVar(Family.U, block, index, order)


def s(index: int = 0, order: int = 0) -> DerivVar:
    return DerivVar(Family.PARAM, 0, index, order)


def t(order: int = 0) -> DerivVar:
    return DerivVar(Family.T, 0, 0, order)
