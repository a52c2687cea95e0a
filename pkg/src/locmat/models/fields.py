"""
Exact fields: the rationals, prime fields GF(p) and extensions GF(p^k).

Characteristic 2 and 3 are rejected. Extension fields are GF(p)[t]/(f) for a
monic irreducible f; element payloads are coefficient tuples in ascending
degree. Arithmetic on payloads is done with plain Python ints; sympy is only
used for validation (primality, irreducibility) and for factoring q - 1.

Root towers implement the compatible n-th root maps τ_n over a finite field
of order q: τ_n(x) = x^(n^-1 mod (q-1)), which exists for every n dividing the
index exactly when the index has no prime factor in common with q - 1.
"""

from __future__ import annotations

import logging
import numbers
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple, Union

from sympy import Poly, factorint, isprime
from sympy.abc import x as _x

from locmat.constants import DEFAULT_MODULI, MAX_EXTENSION_DEGREE, MIN_CHARACTERISTIC
from locmat.errors import (
    FieldDivisionByZero,
    FieldError,
    MixedFieldsError,
    NDoesNotDivideIndexError,
    NoTowerError,
)
from locmat.models.steinitz import SteinitzNumber

logger = logging.getLogger(__name__)


class FieldKind(Enum):
    RATIONALS = "Q"
    PRIME = "GF(p)"
    EXTENSION = "GF(p,k)"


@lru_cache(maxsize=None)
def _is_irreducible(modulus: Tuple[int, ...], p: int) -> bool:
    return Poly(list(reversed(modulus)), _x, modulus=p).is_irreducible


@dataclass(frozen=True, slots=True)
class FieldDescriptor:
    """
    Identifies a field. Build instances through ``rationals``, ``prime_field``
    or ``extension_field``; the constructor validates its arguments either way.
    """

    kind: FieldKind
    p: int = 0
    k: int = 1
    modulus: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind is FieldKind.RATIONALS:
            if self.p or self.k != 1 or self.modulus:
                raise FieldError("Q takes no characteristic, degree or modulus")
            return
        if not isprime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.p < MIN_CHARACTERISTIC:
            raise FieldError(f"characteristic {self.p} is excluded (char must not be 2 or 3)")
        if self.kind is FieldKind.PRIME:
            if self.k != 1 or self.modulus:
                raise FieldError("GF(p) takes no degree or modulus")
            return
        if not 2 <= self.k <= MAX_EXTENSION_DEGREE:
            raise FieldError(f"extension degree {self.k} outside 2..{MAX_EXTENSION_DEGREE}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise FieldError(f"modulus {list(self.modulus)} is not monic of degree {self.k}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise FieldError(f"modulus coefficients must lie in 0..{self.p - 1}")
        if not _is_irreducible(self.modulus, self.p):
            raise FieldError(f"modulus {list(self.modulus)} is reducible over GF({self.p})")

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind is not FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return self.k

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for Q."""
        return self.p**self.k if self.is_finite else None

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce an int, Fraction, coefficient sequence or element into this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFieldsError(f"{value} does not belong to {self}")
            return value
        if isinstance(value, numbers.Integral):
            value = int(value)
        if self.kind is FieldKind.RATIONALS:
            if isinstance(value, (list, tuple)):
                raise FieldError("Q elements are numbers, not coefficient vectors")
            return FieldElement(self, Fraction(value))
        if self.kind is FieldKind.PRIME:
            return FieldElement(self, _to_int(value, self.p))
        if isinstance(value, (list, tuple)):
            if len(value) > self.k:
                raise FieldError(f"{len(value)} coefficients given for a degree-{self.k} field")
            coeffs = [int(c) % self.p for c in value] + [0] * (self.k - len(value))
            return FieldElement(self, tuple(coeffs))
        return FieldElement(self, (_to_int(value, self.p),) + (0,) * (self.k - 1))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def generator(self) -> "FieldElement":
        """The class of t for extensions; 2 for prime fields and Q."""
        if self.kind is FieldKind.EXTENSION:
            return self.element([0, 1])
        return self.element(2)

    def elements(self) -> Iterator["FieldElement"]:
        """Enumerate a finite field."""
        if not self.is_finite:
            raise FieldError("Q cannot be enumerated")
        if self.kind is FieldKind.PRIME:
            for v in range(self.p):
                yield FieldElement(self, v)
            return
        for index in range(self.order):
            coeffs = []
            for _ in range(self.k):
                index, c = divmod(index, self.p)
                coeffs.append(c)
            yield FieldElement(self, tuple(coeffs))

    def __str__(self) -> str:
        from locmat.io.literals import format_descriptor

        return format_descriptor(self)


def _to_int(value, p: int) -> int:
    if isinstance(value, Fraction):
        if value.denominator % p == 0:
            raise FieldDivisionByZero(f"{value} has a denominator divisible by {p}")
        return value.numerator * pow(value.denominator, -1, p) % p
    return int(value) % p


@lru_cache(maxsize=None)
def rationals() -> FieldDescriptor:
    return FieldDescriptor(FieldKind.RATIONALS)


@lru_cache(maxsize=None)
def prime_field(p: int) -> FieldDescriptor:
    return FieldDescriptor(FieldKind.PRIME, int(p))


def extension_field(p: int, k: int, modulus: Optional[Sequence[int]] = None) -> FieldDescriptor:
    """
    GF(p^k) presented as GF(p)[t]/(modulus).

    The default modulus comes from ``DEFAULT_MODULI``; k = 1 gives GF(p).
    """
    return _extension_field(int(p), int(k), None if modulus is None else tuple(int(c) for c in modulus))


@lru_cache(maxsize=None)
def _extension_field(p: int, k: int, modulus: Optional[Tuple[int, ...]]) -> FieldDescriptor:
    if k == 1:
        return prime_field(p)
    if modulus is None:
        if (p, k) not in DEFAULT_MODULI:
            raise FieldError(f"no default modulus for GF({p}^{k}); supply one")
        modulus = DEFAULT_MODULI[(p, k)]
    return FieldDescriptor(FieldKind.EXTENSION, p, k, modulus)


# ----------------------------------------------------------------------
# Elements
# ----------------------------------------------------------------------

Payload = Union[Fraction, int, Tuple[int, ...]]


@dataclass(frozen=True, slots=True, eq=False)
class FieldElement:
    """Immutable field element. Plain ints are coerced on either side of an operator."""

    field: FieldDescriptor
    value: Payload

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFieldsError(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def is_zero(self) -> bool:
        kind = self.field.kind
        if kind is FieldKind.EXTENSION:
            return not any(self.value)
        return self.value == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            try:
                other = self.field.element(other)
            except FieldDivisionByZero:
                # 1/p has no image in characteristic p
                return False
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        if field.kind is FieldKind.RATIONALS:
            return FieldElement(field, self.value + other.value)
        if field.kind is FieldKind.PRIME:
            return FieldElement(field, (self.value + other.value) % field.p)
        return FieldElement(field, tuple((a + b) % field.p for a, b in zip(self.value, other.value)))

    __radd__ = __add__

    def __neg__(self):
        field = self.field
        if field.kind is FieldKind.RATIONALS:
            return FieldElement(field, -self.value)
        if field.kind is FieldKind.PRIME:
            return FieldElement(field, -self.value % field.p)
        return FieldElement(field, tuple(-a % field.p for a in self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        if field.kind is FieldKind.RATIONALS:
            return FieldElement(field, self.value * other.value)
        if field.kind is FieldKind.PRIME:
            return FieldElement(field, self.value * other.value % field.p)
        return FieldElement(field, _poly_mulmod(self.value, other.value, field.modulus, field.p))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise FieldDivisionByZero(f"zero has no inverse in {self.field}")
        field = self.field
        if field.kind is FieldKind.RATIONALS:
            return FieldElement(field, 1 / self.value)
        if field.kind is FieldKind.PRIME:
            return FieldElement(field, pow(self.value, -1, field.p))
        return self ** (field.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, exponent: int) -> "FieldElement":
        exponent = int(exponent)
        field = self.field
        if exponent < 0:
            return self.inv() ** (-exponent)
        if exponent == 0:
            return field.one()
        if self.is_zero():
            return self
        if field.kind is FieldKind.RATIONALS:
            return FieldElement(field, self.value**exponent)
        # x^(q-1) = 1 on the unit group
        exponent %= field.order - 1
        if exponent == 0:
            return field.one()
        if field.kind is FieldKind.PRIME:
            return FieldElement(field, pow(self.value, exponent, field.p))
        result, base = field.one().value, self.value
        while exponent:
            if exponent & 1:
                result = _poly_mulmod(result, base, field.modulus, field.p)
            base = _poly_mulmod(base, base, field.modulus, field.p)
            exponent >>= 1
        return FieldElement(field, result)

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        from locmat.io.literals import format_element

        return format_element(self)


def _poly_mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> Tuple[int, ...]:
    """Multiply coefficient vectors and reduce by the monic modulus."""
    k = len(modulus) - 1
    product = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                product[i + j] += ai * bj
    for deg in range(2 * k - 2, k - 1, -1):
        c = product[deg] % p
        if c:
            for i in range(k + 1):
                product[deg - k + i] -= c * modulus[i]
    return tuple(c % p for c in product[:k])


# ----------------------------------------------------------------------
# Field automorphisms and orders
# ----------------------------------------------------------------------


def frobenius(x: FieldElement, power: int) -> FieldElement:
    """
    x -> x^(p^power), with power taken mod the extension degree.

    Raises
    ------
    FieldError
        For a nonzero power over Q (Aut(Q) is trivial).
    """
    field = x.field
    if not field.is_finite:
        if power != 0:
            raise FieldError("Q has no nontrivial automorphisms; only power 0 is allowed")
        return x
    power %= field.k
    if power == 0:
        return x
    return x ** (field.p**power)


def multiplicative_order(x: FieldElement) -> Optional[int]:
    """Order of x in F*, or None when it is infinite (Q) ."""
    if x.is_zero():
        raise FieldDivisionByZero("zero is not a unit")
    field = x.field
    if not field.is_finite:
        if x == 1:
            return 1
        if x == -1:
            return 2
        return None
    order = field.order - 1
    for r in factorint(order):
        while order % r == 0 and x ** (order // r) == 1:
            order //= r
    return order


# ----------------------------------------------------------------------
# Root towers
# ----------------------------------------------------------------------


def tower_exists(field: FieldDescriptor, s: SteinitzNumber) -> bool:
    """
    True iff compatible n-th root maps τ_n exist for every n | s.

    Over GF(q) this holds exactly when no prime dividing q - 1 occurs in s,
    because then x -> x^n is a bijection of F* for every n | s.

    Raises
    ------
    FieldError
        For Q, where exact towers are not available.
    """
    if not field.is_finite:
        raise FieldError("root towers are only implemented over finite fields")
    return all(s.exponent(int(r)) == 0 for r in factorint(field.order - 1))


@dataclass(frozen=True, slots=True)
class RootTower:
    """The maps τ_n for all n dividing ``index`` over a finite field."""

    field: FieldDescriptor
    index: SteinitzNumber

    def __post_init__(self):
        if not self.field.is_finite:
            raise NoTowerError("root towers are only implemented over finite fields")
        if not tower_exists(self.field, self.index):
            raise NoTowerError(
                f"no root tower over {self.field} for index {self.index}: "
                f"it shares a prime with {self.field.order - 1}"
            )

    def levels(self, limit: int) -> list:
        """Finite levels n | index with n <= limit."""
        return [n for n in range(1, int(limit) + 1) if self.index.has_divisor(n)]


def tau(tower: RootTower, n: int, x: FieldElement) -> FieldElement:
    """
    The n-th root τ_n(x) = x^(n^-1 mod (q - 1)); τ_n(0) = 0.

    Raises
    ------
    NDoesNotDivideIndexError
        If n does not divide the tower index.
    """
    if n < 1 or not tower.index.has_divisor(n):
        raise NDoesNotDivideIndexError(f"{n} does not divide the tower index {tower.index}")
    x = tower.field.element(x)
    if x.is_zero():
        return x
    return x ** pow(n, -1, tower.field.order - 1)
