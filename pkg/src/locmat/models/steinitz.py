"""
Steinitz (supernatural) numbers.

A Steinitz number is a formal product of primes with exponents in
N ∪ {0, ∞}. Only numbers that agree with a default exponent (0 or ∞) on all
but finitely many primes are representable; that class is closed under every
operation in this module and covers all finite integers, p^∞ patterns and the
maximal number Ω.

Exponents are Python ints (arbitrary precision) or ``INFINITY``. Sums and
differences go through ``_add_exp`` / ``_sub_exp`` so that huge finite
exponents are never converted to float.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from sympy import factorint, isprime

from locmat.errors import NotDivisibleError

logger = logging.getLogger(__name__)

INFINITY = math.inf

Exponent = Union[int, float]


def _check_exponent(e: Exponent) -> Exponent:
    if e == INFINITY:
        return INFINITY
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise ValueError(f"Exponent must be a non-negative integer or infinity, got {e!r}")
    return e


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    if a == INFINITY or b == INFINITY:
        return INFINITY
    return a + b


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    # Caller guarantees b <= a
    if a == INFINITY:
        return INFINITY
    return a - b


@dataclass(frozen=True, slots=True)
class SteinitzNumber:
    """
    Canonical Steinitz number.

    ``explicit`` is a sorted tuple of (prime, exponent) pairs; every prime not
    listed carries ``default_exp``. No explicit entry equals the default.
    """

    explicit: Tuple[Tuple[int, Exponent], ...] = ()
    default_exp: Exponent = 0

    def __post_init__(self):
        if self.default_exp not in (0, INFINITY):
            raise ValueError(f"default exponent must be 0 or infinity, got {self.default_exp!r}")
        seen = set()
        previous = 0
        for p, e in self.explicit:
            if p in seen or p <= previous:
                raise ValueError("explicit primes must be distinct and ascending")
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            _check_exponent(e)
            if e == self.default_exp:
                raise ValueError(f"explicit exponent of {p} equals the default; not canonical")
            seen.add(p)
            previous = p

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_exponents(
        cls, exponents: Mapping[int, Exponent], default_exp: Exponent = 0
    ) -> "SteinitzNumber":
        """Build the canonical number from a prime -> exponent map."""
        if default_exp not in (0, INFINITY):
            raise ValueError(f"default exponent must be 0 or infinity, got {default_exp!r}")
        entries = []
        for p, e in exponents.items():
            p = int(p)
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
            e = _check_exponent(e)
            if e != default_exp:
                entries.append((p, e))
        entries.sort()
        return cls(tuple(entries), default_exp)

    @classmethod
    def one(cls) -> "SteinitzNumber":
        return cls((), 0)

    @classmethod
    def omega(cls) -> "SteinitzNumber":
        """The maximal Steinitz number: every prime to the power infinity."""
        return cls((), INFINITY)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def as_dict(self) -> Dict[int, Exponent]:
        return dict(self.explicit)

    def exponent(self, p: int) -> Exponent:
        return self.as_dict().get(p, self.default_exp)

    def primes(self) -> List[int]:
        return [p for p, _ in self.explicit]

    def is_finite(self) -> bool:
        """True when the number is a positive integer."""
        return self.default_exp == 0 and all(e != INFINITY for _, e in self.explicit)

    def to_integer(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is not a finite integer")
        return math.prod(p**e for p, e in self.explicit)

    def has_divisor(self, n: int) -> bool:
        """True iff the positive integer n divides this number."""
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise ValueError(f"expected a positive integer, got {n!r}")
        return all(e <= self.exponent(int(p)) for p, e in factorint(int(n)).items())

    def __str__(self) -> str:
        # Imported lazily; the parser module depends on this one
        from locmat.io.steinitz_parser import format_steinitz

        return format_steinitz(self)


# ----------------------------------------------------------------------
# Operations
# ----------------------------------------------------------------------


def from_integer(n: int) -> SteinitzNumber:
    """
    Factor a positive integer into a Steinitz number.

    Raises
    ------
    ValueError
        If n < 1 (Steinitz numbers have no zero).
    """
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"Steinitz numbers are built from positive integers, got {n!r}")
    n = int(n)
    if n == 1:
        return SteinitzNumber.one()
    return SteinitzNumber.from_exponents({int(p): int(e) for p, e in factorint(n).items()})


def _combine(
    s1: SteinitzNumber, s2: SteinitzNumber, op
) -> SteinitzNumber:
    """Apply an exponentwise operation over the union of listed primes."""
    default = op(s1.default_exp, s2.default_exp)
    d1, d2 = s1.as_dict(), s2.as_dict()
    exponents = {
        p: op(d1.get(p, s1.default_exp), d2.get(p, s2.default_exp))
        for p in set(d1) | set(d2)
    }
    return SteinitzNumber.from_exponents(exponents, default)


def multiply(s1: SteinitzNumber, s2: SteinitzNumber) -> SteinitzNumber:
    """Exponentwise sum, with infinity absorbing."""
    return _combine(s1, s2, _add_exp)


def divides(s2: SteinitzNumber, s1: SteinitzNumber) -> bool:
    """True iff s2 | s1, i.e. every exponent of s2 is at most that of s1."""
    # Infinitely many primes carry both defaults
    if s2.default_exp > s1.default_exp:
        return False
    d1, d2 = s1.as_dict(), s2.as_dict()
    for p in set(d1) | set(d2):
        if d2.get(p, s2.default_exp) > d1.get(p, s1.default_exp):
            return False
    return True


def quotient(s1: SteinitzNumber, s2: SteinitzNumber) -> SteinitzNumber:
    """
    Return a witness s3 with s1 = s2 * s3.

    The witness is unique except at primes where both exponents are infinite;
    there the maximal witness (infinity) is returned.

    Raises
    ------
    NotDivisibleError
        If s2 does not divide s1.
    """
    if not divides(s2, s1):
        raise NotDivisibleError(f"{s2} does not divide {s1}")
    return _combine(s1, s2, _sub_exp)


def _nonempty(values: Iterable[SteinitzNumber], name: str) -> List[SteinitzNumber]:
    values = list(values)
    if not values:
        raise ValueError(f"{name} of an empty list is undefined")
    return values


def lcm(values: Iterable[SteinitzNumber]) -> SteinitzNumber:
    """Exponentwise maximum."""
    return reduce(lambda a, b: _combine(a, b, max), _nonempty(values, "lcm"))


def gcd(values: Iterable[SteinitzNumber]) -> SteinitzNumber:
    """Exponentwise minimum."""
    return reduce(lambda a, b: _combine(a, b, min), _nonempty(values, "gcd"))


def steinitz_of_chain(chain: Iterable[int]) -> SteinitzNumber:
    """
    Steinitz number of the union of an ascending divisor chain n_1 | n_2 | ...

    This is the least common multiple of the chain. For a finite chain it is
    the last element; infinite chains are represented by their finite prefix
    together with the caller's own limit.

    Raises
    ------
    ValueError
        If consecutive members do not divide each other.
    """
    chain = [int(n) for n in chain]
    if not chain:
        raise ValueError("chain is empty")
    for a, b in zip(chain, chain[1:]):
        if b % a != 0:
            raise ValueError(f"chain is not a divisor chain: {a} does not divide {b}")
    return lcm(from_integer(n) for n in chain)


def finite_divisors(s: SteinitzNumber, limit: int) -> List[int]:
    """All integers 1 <= n <= limit dividing s, ascending."""
    return [n for n in range(1, int(limit) + 1) if s.has_divisor(n)]
