import random

import pytest

from src.algebra.parser import parse
from src.models.polynomial import DiffPolynomial
from src.models.ring import RingDescriptor
from src.models.variables import y


@pytest.fixture
def ring2():
    return RingDescriptor.parse("Y=2 field=Q")


@pytest.fixture
def ring3():
    return RingDescriptor.parse("Y=3 field=Q")


@pytest.fixture
def ringx():
    return RingDescriptor.parse("Y=2 field=Qx")


@pytest.fixture
def P(ring2):
    """Parse in the two-variable ring"""
    return lambda text, ring=ring2: parse(text, ring)


def make_random_polynomial(rng: random.Random, ring: RingDescriptor, indices, max_degree: int = 3,
                           max_order: int = 2, max_terms: int = 3) -> DiffPolynomial:
    """A nonzero non-ground polynomial with small integer coefficients in y_j, j in indices"""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            term = DiffPolynomial.constant(ring, rng.choice([-3, -2, -1, 1, 2, 3]))
            for _ in range(rng.randint(0, max_degree)):
                term = term * DiffPolynomial.var(ring, y(rng.choice(indices), rng.randint(0, max_order)))
            terms.append(term)
        p = DiffPolynomial.sum(ring, terms)
        if p and not p.is_ground():
            return p


@pytest.fixture
def random_polynomial():
    return make_random_polynomial
