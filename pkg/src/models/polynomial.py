"""Sparse differential polynomials with exact ground coefficients"""
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from sympy import QQ, ZZ

from ..errors import DivisionByZeroError, GroundElementError, RingMismatchError, UnknownVariableError
from .ground import GroundMode
from .ring import RingDescriptor
from .variables import BaseVar, DerivVar, Family

# A differential monomial: (DerivVar, exponent) pairs sorted by DerivVar, exponents >= 1
Monomial = Tuple[Tuple[DerivVar, int], ...]
ONE: Monomial = ()


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    powers = dict(a)
    for var, exp in b:
        powers[var] = powers.get(var, 0) + exp
    return tuple(sorted(powers.items()))


def monomial_without(m: Monomial, var: DerivVar, times: int = 1) -> Monomial:
    result = []
    for v, e in m:
        if v == var:
            if e > times:
                result.append((v, e - times))
        else:
            result.append((v, e))
    return tuple(result)


def monomial_display_key(m: Monomial) -> tuple:
    """Lexicographic key under the display ranking, highest factor first"""
    ordered = sorted(m, key=lambda factor: factor[0].display_key(), reverse=True)
    return tuple((v.display_key(), e) for v, e in ordered)


def monomial_degree(m: Monomial, predicate: Optional[Callable[[DerivVar], bool]] = None) -> int:
    return sum(e for v, e in m if predicate is None or predicate(v))


def _render_factor(var: DerivVar, exp: int) -> str:
    return var.name if exp == 1 else f"{var.name}^{exp}"


Operand = Union['DiffPolynomial', int, Any]


class DiffPolynomial:
    """An element of F{indeterminates} for a declared ring"""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Optional[Mapping[Monomial, Any]] = None):
        self.ring = ring
        self.terms: Dict[Monomial, Any] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def zero(cls, ring: RingDescriptor) -> 'DiffPolynomial':
        return cls(ring)

    @classmethod
    def one(cls, ring: RingDescriptor) -> 'DiffPolynomial':
        return cls(ring, {ONE: ring.ground.one})

    @classmethod
    def constant(cls, ring: RingDescriptor, value: Any) -> 'DiffPolynomial':
        return cls(ring, {ONE: ring.ground.convert(value)})

    @classmethod
    def var(cls, ring: RingDescriptor, var: DerivVar, power: int = 1) -> 'DiffPolynomial':
        if not ring.contains(var.base):
            raise UnknownVariableError(f"variable {var.name} is not declared in {ring.render()}")
        if var.order > 0 and ring.is_constant(var.base):
            return cls(ring)
        if power == 0:
            return cls.one(ring)
        return cls(ring, {((var, power),): ring.ground.one})

    @classmethod
    def sum(cls, ring: RingDescriptor, items: Iterable['DiffPolynomial']) -> 'DiffPolynomial':
        terms: Dict[Monomial, Any] = {}
        for item in items:
            item._check_ring(ring)
            for m, c in item.terms.items():
                terms[m] = terms.get(m, ring.ground.zero) + c
        return cls(ring, terms)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_ground(self) -> bool:
        return all(not m for m in self.terms)

    def ground_value(self) -> Any:
        if not self.is_ground():
            raise GroundElementError(f"{self.render()} is not a ground element")
        return self.terms.get(ONE, self.ring.ground.zero)

    def variables(self) -> Set[DerivVar]:
        return {v for m in self.terms for v, _ in m}

    def bases(self) -> Set[BaseVar]:
        return {v.base for v in self.variables()}

    def involves(self, var: DerivVar) -> bool:
        return any(v == var for m in self.terms for v, _ in m)

    def free_of(self, family: Family) -> bool:
        return all(v.family != family for v in self.variables())

    def degree(self, var: DerivVar) -> int:
        return max((e for m in self.terms for v, e in m if v == var), default=0)

    def total_degree(self) -> int:
        return max((monomial_degree(m) for m in self.terms), default=0)

    def term_degrees(self, predicate: Callable[[DerivVar], bool]) -> Set[int]:
        return {monomial_degree(m, predicate) for m in self.terms}

    def order(self, base: Optional[BaseVar] = None) -> int:
        """Highest derivative order occurring (of `base` when given); -1 when absent"""
        orders = [v.order for v in self.variables() if base is None or v.base == base]
        return max(orders, default=-1)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Any]]:
        return sorted(self.terms.items(), key=lambda item: monomial_display_key(item[0]), reverse=True)

    def coefficients_in(self, var: DerivVar) -> Dict[int, 'DiffPolynomial']:
        """View as a univariate polynomial in `var`: exponent -> coefficient"""
        buckets: Dict[int, Dict[Monomial, Any]] = {}
        for m, c in self.terms.items():
            exp = 0
            rest = []
            for v, e in m:
                if v == var:
                    exp = e
                else:
                    rest.append((v, e))
            buckets.setdefault(exp, {})[tuple(rest)] = c
        return {k: DiffPolynomial(self.ring, terms) for k, terms in buckets.items()}

    @classmethod
    def from_coefficients(cls, ring: RingDescriptor, var: DerivVar,
                          coefficients: Mapping[int, 'DiffPolynomial']) -> 'DiffPolynomial':
        terms: Dict[Monomial, Any] = {}
        for exp, coefficient in coefficients.items():
            factor: Monomial = ((var, exp),) if exp else ONE
            for m, c in coefficient.terms.items():
                key = monomial_mul(m, factor)
                terms[key] = terms.get(key, ring.ground.zero) + c
        return cls(ring, terms)

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, ring: RingDescriptor):
        if self.ring != ring:
            raise RingMismatchError(f"operands live in different rings: {self.ring.render()} and {ring.render()}")

    def _coerce(self, other: Operand) -> 'DiffPolynomial':
        if isinstance(other, DiffPolynomial):
            other._check_ring(self.ring)
            return other
        return DiffPolynomial.constant(self.ring, other)

    def __add__(self, other: Operand) -> 'DiffPolynomial':
        other = self._coerce(other)
        terms = dict(self.terms)
        zero = self.ring.ground.zero
        for m, c in other.terms.items():
            terms[m] = terms.get(m, zero) + c
        return DiffPolynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> 'DiffPolynomial':
        return DiffPolynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Operand) -> 'DiffPolynomial':
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> 'DiffPolynomial':
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> 'DiffPolynomial':
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return DiffPolynomial(self.ring)
        terms: Dict[Monomial, Any] = {}
        zero = self.ring.ground.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                terms[m] = terms.get(m, zero) + c1 * c2
        return DiffPolynomial(self.ring, terms)

    __rmul__ = __mul__

    def mul_ground(self, value: Any) -> 'DiffPolynomial':
        value = self.ring.ground.convert(value)
        return DiffPolynomial(self.ring, {m: c * value for m, c in self.terms.items()})

    def __truediv__(self, other: Operand) -> 'DiffPolynomial':
        divisor = self._coerce(other)
        if divisor.is_zero():
            raise DivisionByZeroError("division by the zero polynomial")
        if not divisor.is_ground():
            raise GroundElementError("only division by ground elements is supported")
        return self.mul_ground(self.ring.ground.one / divisor.ground_value())

    def __pow__(self, exponent: int) -> 'DiffPolynomial':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = DiffPolynomial.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DiffPolynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.is_ground() and self.ground_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- derivations -------------------------------------------------------

    def differentiate(self, times: int = 1) -> 'DiffPolynomial':
        """δ^times applied with the Leibniz rule"""
        result = self
        for _ in range(times):
            result = result._derivative()
        return result

    def _derivative(self) -> 'DiffPolynomial':
        ground = self.ring.ground
        terms: Dict[Monomial, Any] = {}
        for m, c in self.terms.items():
            dc = ground.derivative(c)
            if dc:
                terms[m] = terms.get(m, ground.zero) + dc
            for v, e in m:
                if self.ring.is_constant(v.base):
                    continue
                shifted = monomial_mul(monomial_without(m, v), ((v.shifted(1), 1),))
                terms[shifted] = terms.get(shifted, ground.zero) + c * e
        return DiffPolynomial(self.ring, terms)

    def partial(self, var: DerivVar) -> 'DiffPolynomial':
        """Formal partial derivative ∂/∂var"""
        terms: Dict[Monomial, Any] = {}
        zero = self.ring.ground.zero
        for m, c in self.terms.items():
            for v, e in m:
                if v == var:
                    reduced = monomial_without(m, v)
                    terms[reduced] = terms.get(reduced, zero) + c * e
        return DiffPolynomial(self.ring, terms)

    # -- substitution ------------------------------------------------------

    def compose(self, mapping: Mapping[DerivVar, 'DiffPolynomial'],
                ring: Optional[RingDescriptor] = None) -> 'DiffPolynomial':
        """Replace derivative variables by polynomials of `ring` (default: own ring)"""
        target = ring or self.ring
        ground = target.ground
        powers: Dict[Tuple[DerivVar, int], DiffPolynomial] = {}

        def power(var: DerivVar, exp: int) -> DiffPolynomial:
            key = (var, exp)
            if key not in powers:
                image = mapping.get(var)
                if image is None:
                    image = DiffPolynomial.var(target, var)
                else:
                    image._check_ring(target)
                powers[key] = image ** exp
            return powers[key]

        result: Dict[Monomial, Any] = {}
        for m, c in self.terms.items():
            product = DiffPolynomial.constant(target, ground.convert(c))
            for v, e in m:
                product = product * power(v, e)
                if not product:
                    break
            for pm, pc in product.terms.items():
                result[pm] = result.get(pm, ground.zero) + pc
        return DiffPolynomial(target, result)

    def embed(self, ring: RingDescriptor) -> 'DiffPolynomial':
        """The same polynomial read in a larger ring"""
        if ring == self.ring:
            return self
        for v in self.variables():
            if not ring.contains(v.base):
                raise RingMismatchError(f"{v.name} does not exist in {ring.render()}")
        ground = ring.ground
        return DiffPolynomial(ring, {m: ground.convert(c) for m, c in self.terms.items()})

    # -- normal forms ------------------------------------------------------

    def leading_display_term(self) -> Tuple[Monomial, Any]:
        return max(self.terms.items(), key=lambda item: monomial_display_key(item[0]))

    def normalized(self) -> 'DiffPolynomial':
        """Primitive integer coefficients with positive display-leading coefficient over Q, monic over Q(x)"""
        if not self.terms:
            return self
        ground = self.ring.ground
        _, lead = self.leading_display_term()
        if self.ring.field == GroundMode.QX:
            return self.mul_ground(ground.one / lead)
        content = ZZ.zero
        common = ZZ.one
        for c in self.terms.values():
            content = ZZ.gcd(content, QQ.numer(c))
            common = ZZ.lcm(common, QQ.denom(c))
        factor = QQ(common, content)
        if lead < 0:
            factor = -factor
        return self.mul_ground(factor)

    def is_normalized(self) -> bool:
        return self == self.normalized()

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        ground = self.ring.ground
        pieces = []
        for m, c in self.sorted_terms():
            negative = ground.sign(c) < 0
            magnitude = -c if negative else c
            factors = [_render_factor(v, e) for v, e in sorted(m, key=lambda f: f[0].display_key())]
            if not factors:
                body = ground.render_factor(magnitude)
            elif magnitude == ground.one:
                body = "*".join(factors)
            else:
                body = "*".join([ground.render_factor(magnitude)] + factors)
            pieces.append((negative, body))
        negative, body = pieces[0]
        text = ("-" if negative else "") + body
        for negative, body in pieces[1:]:
            text += (" - " if negative else " + ") + body
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"DiffPolynomial({self.render()!r})"

    def to_dict(self) -> Dict[str, Any]:
        return {'ring': self.ring.render(), 'polynomial': self.render()}
