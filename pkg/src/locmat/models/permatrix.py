"""
Periodic infinite matrices.

An n-periodic (N x N)-matrix is diag(a, a, ...) for an n x n block a. Values
are always stored at their minimal period, so two PeriodicMatrix objects are
equal exactly when they describe the same infinite matrix. Binary operations
lift both operands to the lcm of their periods, combine the blocks and
re-canonicalize.

Blocks are numpy object arrays of FieldElement while computing; the stored
form is a tuple of row tuples. All public indices are 1-based.

Block view (Wedderburn re-indexing): for q = n*k the q x q block is read as
an n x n matrix of k x k blocks, global index i = (l - 1) n + ī mapping to
outer index ī and inner index l.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from sympy import divisors

from locmat.errors import (
    FieldError,
    IndexRangeError,
    MixedFieldsError,
    NotDivisibleError,
    SingularMatrixError,
)
from locmat.models.fields import FieldDescriptor, FieldElement

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Array helpers
# ----------------------------------------------------------------------


def _identity_array(field: FieldDescriptor, n: int) -> np.ndarray:
    arr = np.full((n, n), field.zero(), dtype=object)
    np.fill_diagonal(arr, field.one())
    return arr


def _repeat_block(block: np.ndarray, m: int, field: FieldDescriptor) -> np.ndarray:
    """diag(block, ..., block) of total size m."""
    n = block.shape[0]
    arr = np.full((m, m), field.zero(), dtype=object)
    for start in range(0, m, n):
        arr[start : start + n, start : start + n] = block
    return arr


def _minimal_period_of(arr: np.ndarray, field: FieldDescriptor) -> int:
    """Smallest d | n such that arr is a diagonal repetition of its d x d corner."""
    n = arr.shape[0]
    for d in divisors(n):
        if d == n:
            return n
        if (arr == _repeat_block(arr[:d, :d], n, field)).all():
            return int(d)
    return n


def _determinant(arr: np.ndarray, field: FieldDescriptor) -> FieldElement:
    """Gaussian elimination with first-nonzero pivoting."""
    work = arr.copy()
    n = work.shape[0]
    det = field.one()
    for c in range(n):
        pivot_row = next((r for r in range(c, n) if not work[r, c].is_zero()), None)
        if pivot_row is None:
            return field.zero()
        if pivot_row != c:
            work[[c, pivot_row]] = work[[pivot_row, c]]
            det = -det
        pivot = work[c, c]
        det = det * pivot
        inv_pivot = pivot.inv()
        # Only the pivot row's nonzero columns change; embedded blocks stay sparse
        cols = [col for col in range(c, n) if not work[c, col].is_zero()]
        for r in range(c + 1, n):
            if not work[r, c].is_zero():
                work[r, cols] = work[r, cols] - (work[r, c] * inv_pivot) * work[c, cols]
    return det


def _inverse_array(arr: np.ndarray, field: FieldDescriptor) -> np.ndarray:
    """Gauss-Jordan inverse with first-nonzero pivoting."""
    n = arr.shape[0]
    work = np.concatenate([arr, _identity_array(field, n)], axis=1)
    for c in range(n):
        pivot_row = next((r for r in range(c, n) if not work[r, c].is_zero()), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != c:
            work[[c, pivot_row]] = work[[pivot_row, c]]
        work[c] = work[c] * work[c, c].inv()
        for r in range(n):
            if r != c and not work[r, c].is_zero():
                work[r] = work[r] - work[r, c] * work[c]
    return work[:, n:]


# ----------------------------------------------------------------------
# PeriodicMatrix
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PeriodicMatrix:
    """
    Canonical periodic matrix: ``rows`` is the block at the minimal period.

    Use ``make`` (or the generator functions) to build instances; the
    constructor only checks shape and field membership.
    """

    field: FieldDescriptor
    period: int
    rows: Tuple[Tuple[FieldElement, ...], ...]

    def __post_init__(self):
        if self.period < 1 or len(self.rows) != self.period:
            raise ValueError(f"expected {self.period} rows, got {len(self.rows)}")
        for row in self.rows:
            if len(row) != self.period:
                raise ValueError("block is not square")
            for entry in row:
                if not isinstance(entry, FieldElement) or entry.field != self.field:
                    raise MixedFieldsError(f"entry {entry!r} is not in {self.field}")

    def array(self) -> np.ndarray:
        """A fresh object array holding the block."""
        arr = np.empty((self.period, self.period), dtype=object)
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                arr[i, j] = entry
        return arr

    def entry(self, i: int, j: int) -> FieldElement:
        """Entry (i, j) of the infinite matrix, 1-based."""
        if i < 1 or j < 1:
            raise IndexRangeError(f"indices must be positive, got ({i}, {j})")
        n = self.period
        if (i - 1) // n != (j - 1) // n:
            return self.field.zero()
        return self.rows[(i - 1) % n][(j - 1) % n]

    def is_scalar(self) -> bool:
        return self.period == 1

    def is_identity(self) -> bool:
        return self.period == 1 and self.rows[0][0] == 1

    # Operators ---------------------------------------------------------

    def __add__(self, other: "PeriodicMatrix") -> "PeriodicMatrix":
        return add(self, other)

    def __sub__(self, other: "PeriodicMatrix") -> "PeriodicMatrix":
        return sub(self, other)

    def __neg__(self) -> "PeriodicMatrix":
        return neg(self)

    def __matmul__(self, other: "PeriodicMatrix") -> "PeriodicMatrix":
        return mul(self, other)

    def __mul__(self, scalar) -> "PeriodicMatrix":
        if isinstance(scalar, PeriodicMatrix):
            return NotImplemented
        return scalar_mul(scalar, self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        body = "; ".join(" ".join(_short(e) for e in row) for row in self.rows)
        return f"PeriodicMatrix(period={self.period}, [{body}])"


def _short(x: FieldElement) -> str:
    from locmat.io.literals import format_payload

    return format_payload(x)


# ----------------------------------------------------------------------
# Construction
# ----------------------------------------------------------------------


def _from_array(field: FieldDescriptor, arr: np.ndarray) -> PeriodicMatrix:
    n = arr.shape[0]
    d = _minimal_period_of(arr, field)
    if d != n:
        logger.debug(f"Canonicalized period {n} -> {d}")
    block = arr[:d, :d]
    return PeriodicMatrix(field, d, tuple(tuple(row) for row in block))


def make(field: FieldDescriptor, n: int, entries: Iterable[Sequence]) -> PeriodicMatrix:
    """
    Build the canonical periodic matrix with n x n block ``entries``.

    Entries may be FieldElements of ``field`` or anything ``field.element``
    accepts. The stored period is the minimal one and divides n.

    Raises
    ------
    ValueError
        If the entries are not an n x n array.
    MixedFieldsError
        If an entry belongs to another field.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"period must be positive, got {n}")
    rows = [list(row) for row in entries]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"entries are not a {n} x {n} array")
    arr = np.empty((n, n), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            arr[i, j] = field.element(value)
    return _from_array(field, arr)


def identity(field: FieldDescriptor) -> PeriodicMatrix:
    return PeriodicMatrix(field, 1, ((field.one(),),))


def scalar(field: FieldDescriptor, alpha) -> PeriodicMatrix:
    return PeriodicMatrix(field, 1, ((field.element(alpha),),))


def minimal_period(A: PeriodicMatrix) -> int:
    """Minimal period, rechecked over the divisors of the stored period."""
    return _minimal_period_of(A.array(), A.field)


def contains_level(n: int, m: int) -> bool:
    """M_n^p is a subalgebra of M_m^p iff n divides m."""
    return m % n == 0


def embed(A: PeriodicMatrix, m: int) -> np.ndarray:
    """
    The m x m block diag(a, ..., a) of A (a non-canonical view).

    Raises
    ------
    NotDivisibleError
        If the period of A does not divide m.
    """
    if m < 1 or m % A.period != 0:
        raise NotDivisibleError(f"period {A.period} does not divide {m}")
    return _repeat_block(A.array(), m, A.field)


def _check_same_field(A: PeriodicMatrix, B: PeriodicMatrix) -> None:
    if A.field != B.field:
        raise MixedFieldsError(f"cannot combine matrices over {A.field} and {B.field}")


def _lift_pair(A: PeriodicMatrix, B: PeriodicMatrix) -> Tuple[np.ndarray, np.ndarray]:
    _check_same_field(A, B)
    m = lcm(A.period, B.period)
    return embed(A, m), embed(B, m)


# ----------------------------------------------------------------------
# Ring operations
# ----------------------------------------------------------------------


def add(A: PeriodicMatrix, B: PeriodicMatrix) -> PeriodicMatrix:
    a, b = _lift_pair(A, B)
    return _from_array(A.field, a + b)


def sub(A: PeriodicMatrix, B: PeriodicMatrix) -> PeriodicMatrix:
    a, b = _lift_pair(A, B)
    return _from_array(A.field, a - b)


def neg(A: PeriodicMatrix) -> PeriodicMatrix:
    return _from_array(A.field, -A.array())


def mul(A: PeriodicMatrix, B: PeriodicMatrix) -> PeriodicMatrix:
    a, b = _lift_pair(A, B)
    return _from_array(A.field, a @ b)


def scalar_mul(alpha, A: PeriodicMatrix) -> PeriodicMatrix:
    alpha = A.field.element(alpha)
    return _from_array(A.field, A.array() * alpha)


def transpose(A: PeriodicMatrix) -> PeriodicMatrix:
    return PeriodicMatrix(A.field, A.period, tuple(zip(*A.rows)))


def inverse(A: PeriodicMatrix) -> PeriodicMatrix:
    """
    Exact inverse of A.

    Raises
    ------
    SingularMatrixError
        If A is not invertible.
    """
    try:
        return _from_array(A.field, _inverse_array(A.array(), A.field))
    except SingularMatrixError:
        raise SingularMatrixError(f"{A} is singular") from None


def power(A: PeriodicMatrix, exponent: int) -> PeriodicMatrix:
    """A^exponent; negative exponents go through the inverse."""
    if exponent < 0:
        return power(inverse(A), -exponent)
    result, base = identity(A.field), A
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        base = mul(base, base)
        exponent >>= 1
    return result


def det_at(A: PeriodicMatrix, m: int) -> FieldElement:
    """
    Determinant of the m x m block of A; det_at(A, n k) = det_at(A, n)^k.

    Raises
    ------
    NotDivisibleError
        If the period of A does not divide m.
    """
    return _determinant(embed(A, m), A.field)


# ----------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexRangeError(f"index {i} outside 1..{n}")


def transvection(field: FieldDescriptor, n: int, i: int, j: int, a) -> PeriodicMatrix:
    """t_ij(a) = I + e_ij(a) at period n (1-based i != j)."""
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise ValueError(f"transvection needs distinct indices, got i = j = {i}")
    arr = _identity_array(field, n)
    arr[i - 1, j - 1] = field.element(a)
    return _from_array(field, arr)


def diag_unit(field: FieldDescriptor, n: int, alpha, position: int = 1) -> PeriodicMatrix:
    """diag(1, ..., alpha, ..., 1) at period n, alpha at ``position``; d_11 by default."""
    _check_index(position, n)
    alpha = field.element(alpha)
    if alpha.is_zero():
        raise FieldError("diagonal unit needs a nonzero entry")
    arr = _identity_array(field, n)
    arr[position - 1, position - 1] = alpha
    return _from_array(field, arr)


def ebar(field: FieldDescriptor, n: int, q: int, i: int) -> PeriodicMatrix:
    """
    The idempotent ē_i = diag(e_ii(1), ..., e_ii(1)) with q/n copies.

    As an infinite matrix this is e_ii(1) repeated, so it canonicalizes to
    period n.
    """
    if n < 1 or q % n != 0:
        raise NotDivisibleError(f"{n} does not divide {q}")
    _check_index(i, n)
    arr = np.full((q, q), field.zero(), dtype=object)
    for pos in range(i - 1, q, n):
        arr[pos, pos] = field.one()
    return _from_array(field, arr)


# ----------------------------------------------------------------------
# Block view
# ----------------------------------------------------------------------


def global_to_block(i: int, n: int) -> Tuple[int, int]:
    """Global index i -> (ī, l) with i = (l - 1) n + ī, 1 <= ī <= n."""
    if i < 1:
        raise IndexRangeError(f"index must be positive, got {i}")
    l = (i - 1) // n + 1
    return i - (l - 1) * n, l


def block_to_global(i_bar: int, l: int, n: int) -> int:
    _check_index(i_bar, n)
    return (l - 1) * n + i_bar


@dataclass(frozen=True, slots=True, eq=False)
class BlockView:
    """
    A q x q block read as an n x n matrix over k x k matrices.

    ``entries[ī - 1, j̄ - 1, l - 1, r - 1]`` is the global entry
    ((l - 1) n + ī, (r - 1) n + j̄).
    """

    field: FieldDescriptor
    outer: int
    inner: int
    entries: np.ndarray

    def block(self, i: int, j: int) -> np.ndarray:
        """Outer entry (i, j) as a k x k array, 1-based."""
        _check_index(i, self.outer)
        _check_index(j, self.outer)
        return self.entries[i - 1, j - 1]

    def is_zero_block(self, i: int, j: int) -> bool:
        return all(e.is_zero() for e in self.block(i, j).flat)

    def __add__(self, other: "BlockView") -> "BlockView":
        self._check_compatible(other)
        return BlockView(self.field, self.outer, self.inner, self.entries + other.entries)

    def __matmul__(self, other: "BlockView") -> "BlockView":
        self._check_compatible(other)
        n, k = self.outer, self.inner
        out = np.empty((n, n, k, k), dtype=object)
        for i in range(n):
            for j in range(n):
                acc = np.full((k, k), self.field.zero(), dtype=object)
                for t in range(n):
                    acc = acc + self.entries[i, t] @ other.entries[t, j]
                out[i, j] = acc
        return BlockView(self.field, n, k, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockView):
            return NotImplemented
        return (
            self.field == other.field
            and self.outer == other.outer
            and self.inner == other.inner
            and bool((self.entries == other.entries).all())
        )

    def _check_compatible(self, other: "BlockView") -> None:
        if self.field != other.field:
            raise MixedFieldsError("block views over different fields")
        if (self.outer, self.inner) != (other.outer, other.inner):
            raise ValueError("block views of different shapes")


def block_view(A: PeriodicMatrix, q: int, n: int) -> BlockView:
    """
    Re-index the q x q block of A as M_n(M_k(F)), k = q / n.

    Raises
    ------
    NotDivisibleError
        If the period of A does not divide q or n does not divide q.
    """
    if n < 1 or q % n != 0:
        raise NotDivisibleError(f"{n} does not divide {q}")
    k = q // n
    arr = embed(A, q)
    entries = arr.reshape(k, n, k, n).transpose(1, 3, 0, 2).copy()
    return BlockView(A.field, n, k, entries)


def unblock(view: BlockView) -> PeriodicMatrix:
    """Inverse of ``block_view``."""
    n, k = view.outer, view.inner
    arr = view.entries.transpose(2, 0, 3, 1).reshape(n * k, n * k)
    return _from_array(view.field, arr.copy())


def outer_support(A: PeriodicMatrix, q: int, n: int) -> List[Tuple[int, int]]:
    """Outer positions (1-based) where block_view(A, q, n) has a nonzero block."""
    view = block_view(A, q, n)
    return [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if not view.is_zero_block(i, j)
    ]


def is_block_transvection(A: PeriodicMatrix, q: int, n: int) -> bool:
    """
    Shape of an E_n(A') generator: A - I is supported in at most one outer
    position, and that position is off the diagonal.
    """
    support = outer_support(sub(A, identity(A.field)), q, n)
    return len(support) == 0 or (len(support) == 1 and support[0][0] != support[0][1])


def is_block_diagonal(A: PeriodicMatrix, q: int, n: int) -> bool:
    """All outer off-diagonal blocks of A vanish (diagonal matrices of M_n(A'))."""
    return all(i == j for i, j in outer_support(A, q, n))
