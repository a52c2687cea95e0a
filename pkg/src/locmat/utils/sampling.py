"""
Seeded random sampling of field elements, periodic matrices, Steinitz
numbers and automorphism descriptors.

Every sampler takes a ``numpy.random.Generator``; values drawn from it are
converted to Python ints before they reach the exact arithmetic.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from locmat.constants import SUITE_PERIODS
from locmat.models.fields import FieldDescriptor, FieldElement, FieldKind
from locmat.models.permatrix import PeriodicMatrix, det_at, diag_unit, make, mul
from locmat.models.steinitz import INFINITY, SteinitzNumber, from_integer
from locmat.processors.autos import AutomorphismDescriptor

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
# Finite exponents, with infinity drawn as the last option
EXPONENT_CHOICES = (0, 0, 1, 2, 3, 5, INFINITY)
RATIONAL_BOUND = 9
RATIONAL_DENOMINATOR_BOUND = 5
MAX_RESAMPLES = 200


def _int(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in [low, high)."""
    return int(rng.integers(low, high))


def random_element(field: FieldDescriptor, rng: np.random.Generator, nonzero: bool = False) -> FieldElement:
    for _ in range(MAX_RESAMPLES):
        if field.kind is FieldKind.RATIONALS:
            value = Fraction(
                _int(rng, -RATIONAL_BOUND, RATIONAL_BOUND + 1),
                _int(rng, 1, RATIONAL_DENOMINATOR_BOUND + 1),
            )
            x = field.element(value)
        elif field.kind is FieldKind.PRIME:
            x = field.element(_int(rng, 0, field.p))
        else:
            x = field.element([_int(rng, 0, field.p) for _ in range(field.k)])
        if not (nonzero and x.is_zero()):
            return x
    raise RuntimeError("could not draw a nonzero element")


def random_matrix(field: FieldDescriptor, n: int, rng: np.random.Generator) -> PeriodicMatrix:
    """A random block at period n (its minimal period may be smaller)."""
    return make(field, n, [[random_element(field, rng) for _ in range(n)] for _ in range(n)])


def random_invertible(field: FieldDescriptor, n: int, rng: np.random.Generator) -> PeriodicMatrix:
    for _ in range(MAX_RESAMPLES):
        A = random_matrix(field, n, rng)
        if not det_at(A, n).is_zero():
            return A
    raise RuntimeError(f"could not draw an invertible {n} x {n} matrix over {field}")


def random_sl(field: FieldDescriptor, n: int, rng: np.random.Generator) -> PeriodicMatrix:
    """A random matrix with det_at(·, n) = 1: d_11(det^-1) times a random invertible one."""
    A = random_invertible(field, n, rng)
    return mul(diag_unit(field, n, det_at(A, n).inv()), A)


def random_period(rng: np.random.Generator, choices: Sequence[int] = SUITE_PERIODS) -> int:
    return int(choices[_int(rng, 0, len(choices))])


def random_steinitz(
    rng: np.random.Generator,
    primes: Sequence[int] = SMALL_PRIMES,
    infinite_default_probability: float = 0.1,
) -> SteinitzNumber:
    """Random exponents over ``primes``; occasionally the default exponent is infinity."""
    default = INFINITY if rng.random() < infinite_default_probability else 0
    exponents = {}
    for p in primes:
        choice = EXPONENT_CHOICES[_int(rng, 0, len(EXPONENT_CHOICES))]
        if default == INFINITY and choice == INFINITY:
            continue
        exponents[p] = choice
    return SteinitzNumber.from_exponents(exponents, default)


def random_integer_steinitz(rng: np.random.Generator, bound: int) -> SteinitzNumber:
    return from_integer(_int(rng, 1, bound + 1))


def random_divisor_chain(rng: np.random.Generator, length: int = 5, factors: Sequence[int] = (1, 2, 3, 5)) -> List[int]:
    """n_1 | n_2 | ... with each step multiplying by a small factor."""
    chain = [int(factors[_int(rng, 0, len(factors))])]
    while len(chain) < length:
        chain.append(chain[-1] * int(factors[_int(rng, 0, len(factors))]))
    return chain


def random_descriptor(
    field: FieldDescriptor,
    rng: np.random.Generator,
    period: int,
    psi: Optional[bool] = None,
) -> AutomorphismDescriptor:
    """Random ψ flag, Frobenius power and (half the time) inner conjugator at ``period``."""
    if psi is None:
        psi = bool(rng.random() < 0.5)
    frob = _int(rng, 0, field.k) if field.is_finite else 0
    inner = random_invertible(field, period, rng) if rng.random() < 0.5 else None
    return AutomorphismDescriptor(field, psi=psi, frob=frob, inner=inner)
