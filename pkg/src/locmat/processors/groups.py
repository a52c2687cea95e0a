"""
Group-level machinery on periodic matrices.

Membership in GL_s^p and SL_s^p, words over transvections and diagonal units,
constructive decomposition of SL and GL elements at a finite level, and the
rewriting of ambient transvections t_ij(α) in M_q(F) into transvections of
the block ring M_n(M_k(F)), q = n k.

Conventions:
- [g, h] = g h g^-1 h^-1.
- Words multiply left to right: evaluate([x1, x2, x3]) = x1 x2 x3.
- Auxiliary indices always take the smallest valid value.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np

from locmat.constants import SL_ORACLE_K_MAX
from locmat.errors import (
    DetNotOneError,
    IndexRangeError,
    MixedFieldsError,
    NotDivisibleError,
    SingularMatrixError,
)
from locmat.models.fields import FieldDescriptor, FieldElement, multiplicative_order
from locmat.models.permatrix import (
    PeriodicMatrix,
    det_at,
    diag_unit,
    embed,
    identity,
    inverse,
    make,
    mul,
    transvection,
)
from locmat.models.steinitz import SteinitzNumber

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Generator tokens and words
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Transvection:
    """t_ij(a) at ``period``; 1-based indices."""

    i: int
    j: int
    a: FieldElement
    period: int

    def __post_init__(self):
        for index in (self.i, self.j):
            if not 1 <= index <= self.period:
                raise IndexRangeError(f"index {index} outside 1..{self.period}")
        if self.i == self.j:
            raise ValueError(f"transvection needs distinct indices, got i = j = {self.i}")

    @property
    def field(self) -> FieldDescriptor:
        return self.a.field

    def matrix(self) -> PeriodicMatrix:
        return transvection(self.field, self.period, self.i, self.j, self.a)

    def inverse(self) -> "Transvection":
        return Transvection(self.i, self.j, -self.a, self.period)


@dataclass(frozen=True, slots=True)
class DiagUnit:
    """diag(1, ..., α, ..., 1) at ``period`` with α at ``position``."""

    position: int
    alpha: FieldElement
    period: int

    def __post_init__(self):
        if not 1 <= self.position <= self.period:
            raise IndexRangeError(f"position {self.position} outside 1..{self.period}")
        if self.alpha.is_zero():
            raise ValueError("diagonal unit needs a nonzero entry")

    @property
    def field(self) -> FieldDescriptor:
        return self.alpha.field

    def matrix(self) -> PeriodicMatrix:
        return diag_unit(self.field, self.period, self.alpha, self.position)

    def inverse(self) -> "DiagUnit":
        return DiagUnit(self.position, self.alpha.inv(), self.period)


Token = Union[Transvection, DiagUnit]


@dataclass(frozen=True, slots=True)
class GroupWord:
    """
    An ordered product of generator tokens at the ambient period ``period``.

    Every token period divides the ambient period, so the word evaluates
    inside GL_period.
    """

    field: FieldDescriptor
    period: int
    factors: Tuple[Token, ...] = ()

    def __post_init__(self):
        if self.period < 1:
            raise ValueError(f"period must be positive, got {self.period}")
        for token in self.factors:
            if token.field != self.field:
                raise MixedFieldsError(f"token {token} is not over {self.field}")
            if self.period % token.period != 0:
                raise ValueError(
                    f"token period {token.period} does not divide word period {self.period}"
                )

    def __len__(self) -> int:
        return len(self.factors)

    def inverse(self) -> "GroupWord":
        return GroupWord(
            self.field, self.period, tuple(t.inverse() for t in reversed(self.factors))
        )

    def transvection_count(self) -> int:
        return sum(1 for t in self.factors if isinstance(t, Transvection))

    def diagonal_tokens(self) -> List[DiagUnit]:
        return [t for t in self.factors if isinstance(t, DiagUnit)]


def evaluate(word: GroupWord) -> PeriodicMatrix:
    """Left-to-right product of the factors; the empty word is I."""
    acc = embed(identity(word.field), word.period)
    for token in word.factors:
        acc = acc @ embed(token.matrix(), word.period)
    return make(word.field, word.period, acc)


# ----------------------------------------------------------------------
# Membership
# ----------------------------------------------------------------------


def is_invertible(A: PeriodicMatrix) -> bool:
    return not det_at(A, A.period).is_zero()


def gl_membership(A: PeriodicMatrix, s: SteinitzNumber) -> bool:
    """A is in GL_s^p iff it is invertible and its minimal period divides s."""
    return s.has_divisor(A.period) and is_invertible(A)


@dataclass(frozen=True, slots=True)
class SLMembership:
    """Result of an SL_s^p query; ``level`` is the smallest witness m."""

    member: bool
    level: Optional[int] = None

    def __str__(self) -> str:
        return f"member level={self.level}" if self.member else "not-member"


def sl_membership(A: PeriodicMatrix, s: SteinitzNumber) -> SLMembership:
    """
    Decide A ∈ SL_s^p(F).

    With n the minimal period and d = det_at(A, n), A lies in SL_{nk} iff
    d^k = 1, so A is a member iff n·k | s for some k with d^k = 1. Over a
    finite field the smallest such k is the multiplicative order of d. Over Q
    the only roots of unity are 1 and -1.

    Returns
    -------
    SLMembership
        ``member`` with the smallest witness level, or not-member.
    """
    n = A.period
    d = det_at(A, n)
    if d.is_zero():
        return SLMembership(False)
    order = multiplicative_order(d)
    if order is None:
        return SLMembership(False)
    level = n * order
    if s.has_divisor(level):
        logger.debug(f"SL member at level {level} (det order {order})")
        return SLMembership(True, level)
    return SLMembership(False)


def sl_membership_oracle(
    A: PeriodicMatrix, s: SteinitzNumber, k_max: int = SL_ORACLE_K_MAX
) -> SLMembership:
    """Brute force: the first k <= k_max with n·k | s and det^k = 1."""
    n = A.period
    d = det_at(A, n)
    power = A.field.one()
    for k in range(1, k_max + 1):
        power = power * d
        if power == 1 and s.has_divisor(n * k):
            return SLMembership(True, n * k)
    return SLMembership(False)


# ----------------------------------------------------------------------
# Commutators
# ----------------------------------------------------------------------


def commutator(g: PeriodicMatrix, h: PeriodicMatrix) -> PeriodicMatrix:
    """
    [g, h] = g h g^-1 h^-1.

    Raises
    ------
    SingularMatrixError
        If g or h is singular.
    """
    return mul(mul(g, h), mul(inverse(g), inverse(h)))


def steinberg_check(field: FieldDescriptor, n: int, i: int, r: int, j: int, a) -> bool:
    """True iff [t_ir(1), t_rj(a)] = t_ij(a) at period n (i, r, j distinct)."""
    if len({i, r, j}) != 3:
        raise ValueError(f"indices must be distinct, got ({i}, {r}, {j})")
    lhs = commutator(
        transvection(field, n, i, r, 1), transvection(field, n, r, j, a)
    )
    return lhs == transvection(field, n, i, j, a)


# ----------------------------------------------------------------------
# Decomposition
# ----------------------------------------------------------------------


def _add_row_multiple(work: np.ndarray, target: int, source: int, a: FieldElement) -> None:
    work[target] = work[target] + a * work[source]


def decompose_transvections(A: PeriodicMatrix, m: int) -> GroupWord:
    """
    Write A ∈ SL_m as a product of transvections at period m.

    Row reduction to I using only row additions L = t_ij(a); the word is the
    sequence of inverses, so evaluate(word) = A. Per column c the diagonal is
    first set to 1 (from a lower row, or via the next row when the column
    below the diagonal is already clear), then the rest of the column is
    cleared. At most m + 1 operations per column.

    Raises
    ------
    NotDivisibleError
        If the period of A does not divide m.
    DetNotOneError
        If det_at(A, m) != 1.
    """
    work = embed(A, m)
    field = A.field
    det = det_at(A, m)
    if det != 1:
        raise DetNotOneError(f"det at level {m} is {det}, not 1")

    ops: List[Tuple[int, int, FieldElement]] = []

    def apply(target: int, source: int, a: FieldElement) -> None:
        _add_row_multiple(work, target, source, a)
        ops.append((target, source, a))

    one = field.one()
    for c in range(m):
        if work[c, c] != 1:
            r = next((r for r in range(c + 1, m) if not work[r, c].is_zero()), None)
            if r is not None:
                apply(c, r, (one - work[c, c]) / work[r, c])
            else:
                # Column below the diagonal is clear, so work[c, c] is a unit;
                # c < m - 1 because the last pivot equals det = 1
                pivot = work[c, c]
                apply(c + 1, c, one)
                apply(c, c + 1, (one - pivot) / pivot)
        for r in range(m):
            if r != c and not work[r, c].is_zero():
                apply(r, c, -work[r, c])

    factors = tuple(Transvection(t + 1, s + 1, -a, m) for t, s, a in ops)
    logger.debug(f"Decomposed period-{A.period} matrix at level {m} into {len(factors)} transvections")
    return GroupWord(field, m, factors)


def decompose_gl(A: PeriodicMatrix, m: int) -> GroupWord:
    """
    Write A ∈ GL_m as DiagUnit(1, d) followed by transvections, d = det_at(A, m).

    The diagonal token is omitted when d = 1, so the identity decomposes to the
    empty word and d_11(α) to the single token DiagUnit(1, α).

    Raises
    ------
    SingularMatrixError
        If A is singular.
    NotDivisibleError
        If the period of A does not divide m.
    """
    d = det_at(A, m)
    if d.is_zero():
        raise SingularMatrixError(f"matrix is singular at level {m}")
    if d == 1:
        return decompose_transvections(A, m)
    head = DiagUnit(1, d, m)
    rest = decompose_transvections(mul(inverse(head.matrix()), A), m)
    return GroupWord(A.field, m, (head,) + rest.factors)


# ----------------------------------------------------------------------
# Block-ring rewriting
# ----------------------------------------------------------------------


def lemma1_rewrite(i: int, j: int, alpha: FieldElement, q: int, n: int) -> GroupWord:
    """
    Express t_ij(α) ∈ M_q(F) through transvections of M_n(M_k(F)), k = q / n.

    If n does not divide i - j the outer indices differ and t_ij(α) is itself
    a block transvection. Otherwise pick the smallest m ∉ {i, j} with
    n ∤ (i - m) and expand the commutator [t_im(1), t_mj(α)] into four factors.

    Raises
    ------
    NotDivisibleError
        If n does not divide q.
    IndexRangeError
        If i or j lies outside 1..q.
    ValueError
        If i = j, or no auxiliary index exists (n = 1).
    """
    if n < 1 or q % n != 0:
        raise NotDivisibleError(f"{n} does not divide {q}")
    for index in (i, j):
        if not 1 <= index <= q:
            raise IndexRangeError(f"index {index} outside 1..{q}")
    if i == j:
        raise ValueError(f"transvection needs distinct indices, got i = j = {i}")
    field = alpha.field
    if (i - j) % n != 0:
        return GroupWord(field, q, (Transvection(i, j, alpha, q),))

    m = next((m for m in range(1, q + 1) if m not in (i, j) and (i - m) % n != 0), None)
    if m is None:
        raise ValueError(f"no auxiliary index for ({i}, {j}) with n = {n}")
    one = field.one()
    factors = (
        Transvection(i, m, one, q),
        Transvection(m, j, alpha, q),
        Transvection(i, m, -one, q),
        Transvection(m, j, -alpha, q),
    )
    logger.debug(f"t_{i}{j} rewritten through auxiliary index {m} (n = {n}, q = {q})")
    return GroupWord(field, q, factors)


def ge_rewrite(A: PeriodicMatrix, q: int, n: int) -> GroupWord:
    """
    Write A ∈ GL_q as a word of E_n(A') generators and at most one
    block-diagonal unit: decompose_gl at level q, then lemma1_rewrite on every
    transvection.
    """
    word = decompose_gl(A, q)
    factors: List[Token] = []
    for token in word.factors:
        if isinstance(token, Transvection):
            factors.extend(lemma1_rewrite(token.i, token.j, token.a, q, n).factors)
        else:
            factors.append(token)
    return GroupWord(A.field, q, tuple(factors))
