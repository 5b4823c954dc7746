"""Recursive-descent parser for differential polynomial expressions"""
import re
from typing import Any, List, NamedTuple, Optional

from ..errors import DivisionByZeroError, GroundElementError, OrderOverflowError, ParseError, UnknownVariableError
from ..models.ground import GroundMode
from ..models.polynomial import DiffPolynomial
from ..models.ring import RingDescriptor
from ..models.variables import BaseVar, DerivVar, Family

MAX_ORDER = 100

PATTERN = "\n".join(
    [
        r"(?P<space>\s+)",
        r"|(?P<number>\d+)",
        r"|(?P<name>[A-Za-z][A-Za-z0-9_]*)",
        r"|(?P<op>[-+*/^()'])",
        r"|(?P<bad>.)",
    ]
)

rx_pattern = re.compile(PATTERN, re.VERBOSE | re.DOTALL)

_Y = re.compile(r"^y(\d+)$")
_U = re.compile(r"^u(?:(\d)(\d)|(\d+)_(\d+))$")
_S = re.compile(r"^s(\d*)$")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    for match in rx_pattern.finditer(text):
        kind = match.lastgroup
        if kind == "space":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {match.group()!r}", position=match.start())
        tokens.append(Token(kind, match.group(), match.start()))
    tokens.append(Token("end", "", len(text)))
    return tokens


def parse_base_var(name: str, ring: RingDescriptor, position: Optional[int] = None) -> BaseVar:
    """Resolve a variable name such as y2, u01, u12_3, s, s1 or t"""
    name = name.strip()
    base = None
    match = _Y.match(name)
    if match:
        base = BaseVar(Family.Y, 0, int(match.group(1)))
    match = _U.match(name)
    if match:
        block = match.group(1) or match.group(3)
        index = match.group(2) or match.group(4)
        base = BaseVar(Family.U, int(block), int(index))
    match = _S.match(name)
    if match:
        base = BaseVar(Family.PARAM, 0, int(match.group(1) or 0))
    if name == "t":
        base = BaseVar(Family.T, 0, 0)
    if base is None or not ring.contains(base):
        raise UnknownVariableError(f"unknown variable {name!r} for {ring.render()}", position=position)
    return base


class _Parser:
    def __init__(self, text: str, ring: RingDescriptor):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise ParseError(f"expected {text!r} but found {found!r}", position=self.current.position)
        return self.advance()

    def parse(self) -> DiffPolynomial:
        if self.current.kind == "end":
            raise ParseError("empty expression", position=0)
        result = self.expression()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", position=self.current.position)
        return result

    def expression(self) -> DiffPolynomial:
        result = self.term()
        while self.current.text in ("+", "-"):
            op = self.advance().text
            right = self.term()
            result = result + right if op == "+" else result - right
        return result

    def term(self) -> DiffPolynomial:
        result = self.unary()
        while self.current.text in ("*", "/"):
            op = self.advance()
            right = self.unary()
            if op.text == "*":
                result = result * right
                continue
            if not right.is_ground():
                raise ParseError("division is only allowed by ground elements", position=op.position)
            if not right:
                raise DivisionByZeroError(f"division by zero at position {op.position}")
            result = result / right
        return result

    def unary(self) -> DiffPolynomial:
        if self.current.text == "-":
            self.advance()
            return -self.unary()
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> DiffPolynomial:
        base = self.atom()
        while self.current.text == "^":
            self.advance()
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        if self.current.text == "(":
            self.advance()
            value = self.integer()
            self.expect(")")
            return value
        return self.integer()

    def integer(self) -> int:
        token = self.current
        if token.kind != "number":
            raise ParseError(f"expected an integer but found {token.text or 'end of input'!r}",
                             position=token.position)
        self.advance()
        return int(token.text)

    def atom(self) -> DiffPolynomial:
        token = self.current
        if token.kind == "number":
            self.advance()
            return DiffPolynomial.constant(self.ring, int(token.text))
        if token.text == "(":
            self.advance()
            inner = self.expression()
            self.expect(")")
            return inner
        if token.kind == "name":
            self.advance()
            if token.text == "x":
                if self.ring.field != GroundMode.QX:
                    raise UnknownVariableError("the ground variable x requires field=Qx", position=token.position)
                return DiffPolynomial.constant(self.ring, self.ring.ground.generator())
            if token.text == "t" and not self.ring.scaling:
                raise UnknownVariableError("the scaling indeterminate t is reserved", position=token.position)
            base = parse_base_var(token.text, self.ring, token.position)
            return DiffPolynomial.var(self.ring, base.derivative(self.derivative_order(token)))
        found = token.text or "end of input"
        raise ParseError(f"unexpected {found!r}", position=token.position)

    def derivative_order(self, name: Token) -> int:
        """Trailing apostrophes, or ^(k) written directly after the name"""
        order = 0
        if self.current.text == "^" and self.peek().text == "(" and self.peek(2).kind == "number" \
                and self.peek(3).text == ")":
            self.advance()
            self.advance()
            order = self.integer()
            self.advance()
        else:
            while self.current.text == "'":
                self.advance()
                order += 1
        if order > MAX_ORDER:
            raise OrderOverflowError(f"derivative order {order} of {name.text} exceeds {MAX_ORDER}",
                                     position=name.position)
        return order


def parse(text: str, ring: RingDescriptor) -> DiffPolynomial:
    """Parse one polynomial of `ring`; the result is in canonical form"""
    return _Parser(text, ring).parse()


def parse_ground(text: str, mode: GroundMode = GroundMode.QX) -> Any:
    """Parse a ground element such as 3/2, x^2 - 1 or 1/(1 - x)"""
    ring = RingDescriptor(field=mode)
    value = parse(text, ring)
    if not value.is_ground():
        raise GroundElementError(f"{text!r} is not a ground element")
    return value.ground_value()
