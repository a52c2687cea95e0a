"""
Independent brute-force oracles used by the verification suites and tests.

These recompute values the slow, obvious way (Leibniz determinants, entry
sums over the infinite matrix, integer arithmetic) without going through the
canonical-form machinery they check.
"""

import math
from itertools import permutations
from typing import Iterable, Sequence

from locmat.models.fields import FieldElement
from locmat.models.permatrix import PeriodicMatrix, embed
from locmat.models.steinitz import SteinitzNumber, divides, from_integer
from locmat.processors.groups import sl_membership_oracle


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def leibniz_det(A: PeriodicMatrix, m: int) -> FieldElement:
    """Determinant of the m x m block as a signed sum over permutations (m <= 6)."""
    arr = embed(A, m)
    total = A.field.zero()
    for perm in permutations(range(m)):
        term = A.field.element(permutation_sign(perm))
        for row, col in enumerate(perm):
            term = term * arr[row, col]
            if term.is_zero():
                break
        total = total + term
    return total


def product_entry(A: PeriodicMatrix, B: PeriodicMatrix, i: int, j: int) -> FieldElement:
    """(AB)_ij summed over the infinite index set (only a finite window is nonzero)."""
    window = math.lcm(A.period, B.period)
    start = (i - 1) // window * window
    total = A.field.zero()
    for k in range(start + 1, start + window + 1):
        total = total + A.entry(i, k) * B.entry(k, j)
    return total


def integer_agrees(s: SteinitzNumber, n: int) -> bool:
    """s equals the Steinitz number of the positive integer n."""
    return s == from_integer(n)


def integer_lcm(values: Iterable[int]) -> SteinitzNumber:
    return from_integer(math.lcm(*values))


def integer_gcd(values: Iterable[int]) -> SteinitzNumber:
    return from_integer(math.gcd(*values))


def divisor_chain_membership(A: PeriodicMatrix, chain: Sequence[int]) -> bool:
    """A lies in SL_{n_i}^p for some n_i of the chain, by the k-scan."""
    return any(sl_membership_oracle(A, from_integer(n)).member for n in chain)


def is_partial_order_sample(a: SteinitzNumber, b: SteinitzNumber, c: SteinitzNumber) -> bool:
    """Reflexivity, antisymmetry and transitivity of divides on one triple."""
    if not divides(a, a):
        return False
    if divides(a, b) and divides(b, a) and a != b:
        return False
    if divides(a, b) and divides(b, c) and not divides(a, c):
        return False
    return True
