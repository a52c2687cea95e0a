"""
Automorphisms and anti-isomorphisms of M_s^p(F) and SL_s^p(F).

A descriptor (psi, frob, inner) acts as

    g -> F_frob( h · ψ^psi(g) · h^-1 )

where ψ(g) = (g^-1)^t, h is the inner conjugator and F_f raises every entry to
the p^f-th power. Composition reduces to the same normal form through

    ψ ∘ inner_h = inner_ψ(h) ∘ ψ
    ψ ∘ F_f     = F_f ∘ ψ
    inner_h ∘ F_f = F_f ∘ inner_{F_-f(h)}

so compose(d1, d2) = (p1 xor p2, f1 + f2, F_-f2(h1) · ψ^p1(h2)).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import lcm
from typing import Callable, List, Optional

from locmat.constants import DESCRIPTOR_PROBE_MIN_PERIOD
from locmat.errors import FieldError, MixedFieldsError, SingularMatrixError
from locmat.models.fields import FieldDescriptor, FieldElement, frobenius
from locmat.models.permatrix import (
    PeriodicMatrix,
    identity,
    inverse,
    mul,
    scalar,
    scalar_mul,
    transpose,
    transvection,
)
from locmat.processors.groups import is_invertible

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AutomorphismDescriptor:
    """
    Normal-form automorphism. ``frob`` is reduced mod the extension degree and
    a central (period-1) conjugator is dropped, since it acts trivially.
    """

    field: FieldDescriptor
    psi: bool = False
    frob: int = 0
    inner: Optional[PeriodicMatrix] = None

    def __post_init__(self):
        if not self.field.is_finite and self.frob != 0:
            raise FieldError("Q has no nontrivial automorphisms; frob must be 0")
        object.__setattr__(self, "frob", int(self.frob) % self.field.k)
        h = self.inner
        if h is None:
            return
        if h.field != self.field:
            raise MixedFieldsError(f"conjugator over {h.field}, descriptor over {self.field}")
        if not is_invertible(h):
            raise SingularMatrixError("inner conjugator is singular")
        if h.is_scalar():
            object.__setattr__(self, "inner", None)

    @classmethod
    def trivial(cls, field: FieldDescriptor) -> "AutomorphismDescriptor":
        return cls(field)

    def is_trivial(self) -> bool:
        return not self.psi and self.frob == 0 and self.inner is None

    def __call__(self, g: PeriodicMatrix) -> PeriodicMatrix:
        return apply(self, g)


# ----------------------------------------------------------------------
# Stages
# ----------------------------------------------------------------------


def apply_psi(g: PeriodicMatrix) -> PeriodicMatrix:
    """ψ(g) = (g^-1)^t."""
    return transpose(inverse(g))


def lift_field_auto(frob_power: int, A: PeriodicMatrix) -> PeriodicMatrix:
    """
    Entrywise Frobenius x -> x^(p^frob_power).

    The map is bijective on F, so the minimal period is unchanged.

    Raises
    ------
    FieldError
        For a nonzero power over Q.
    """
    if frob_power % A.field.k == 0 and (A.field.is_finite or frob_power == 0):
        return A
    rows = tuple(tuple(frobenius(x, frob_power) for x in row) for row in A.rows)
    return PeriodicMatrix(A.field, A.period, rows)


def inner(h: PeriodicMatrix, g: PeriodicMatrix) -> PeriodicMatrix:
    """h g h^-1 at the lcm of the periods."""
    return mul(mul(h, g), inverse(h))


def apply(d: AutomorphismDescriptor, g: PeriodicMatrix) -> PeriodicMatrix:
    """ψ (if set), then conjugation by the inner part, then the field map."""
    if g.field != d.field:
        raise MixedFieldsError(f"matrix over {g.field}, descriptor over {d.field}")
    x = apply_psi(g) if d.psi else g
    if d.inner is not None:
        x = inner(d.inner, x)
    return lift_field_auto(d.frob, x)


def compose(d1: AutomorphismDescriptor, d2: AutomorphismDescriptor) -> AutomorphismDescriptor:
    """Normal form of d1 ∘ d2, i.e. g -> apply(d1, apply(d2, g))."""
    if d1.field != d2.field:
        raise MixedFieldsError(f"cannot compose descriptors over {d1.field} and {d2.field}")
    field = d1.field
    h1 = lift_field_auto(-d2.frob, d1.inner) if d1.inner is not None else identity(field)
    h2 = d2.inner if d2.inner is not None else identity(field)
    if d1.psi:
        h2 = apply_psi(h2)
    h = mul(h1, h2)
    return AutomorphismDescriptor(
        field,
        psi=d1.psi != d2.psi,
        frob=d1.frob + d2.frob,
        inner=h,
    )


# ----------------------------------------------------------------------
# Comparison
# ----------------------------------------------------------------------


def probe_elements(field: FieldDescriptor, n: int) -> List[PeriodicMatrix]:
    """t_ij(1) and t_ij(ω) for all i != j at period n, ω the field generator."""
    omega = field.generator()
    return [
        transvection(field, n, i, j, a)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
        for a in (field.one(), omega)
    ]


def probe_period(*descriptors: AutomorphismDescriptor) -> int:
    periods = [d.inner.period for d in descriptors if d.inner is not None]
    return lcm(DESCRIPTOR_PROBE_MIN_PERIOD, *periods)


def equivalent(
    d1: AutomorphismDescriptor, d2: AutomorphismDescriptor, period: Optional[int] = None
) -> bool:
    """
    Pointwise equality on the probe transvections at periods n and 2n.

    n defaults to the lcm of the conjugator periods (at least 2). Inner
    conjugators are only defined up to central scalars, so components are not
    compared directly.
    """
    if d1.field != d2.field:
        return False
    n = period or probe_period(d1, d2)
    return all(
        apply(d1, t) == apply(d2, t)
        for level in (n, 2 * n)
        for t in probe_elements(d1.field, level)
    )


# ----------------------------------------------------------------------
# Anti-isomorphisms
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AntiIsomorphism:
    """θ(a) = F_frob(h a^t h^-1), stored as a descriptor without ψ."""

    descriptor: AutomorphismDescriptor

    def __post_init__(self):
        if self.descriptor.psi:
            raise ValueError("an anti-isomorphism descriptor cannot carry psi")

    def __call__(self, a: PeriodicMatrix) -> PeriodicMatrix:
        return apply(self.descriptor, transpose(a))


def apply_anti(d: AutomorphismDescriptor, a: PeriodicMatrix) -> PeriodicMatrix:
    return AntiIsomorphism(d)(a)


def anti_to_iso(d: AutomorphismDescriptor) -> AutomorphismDescriptor:
    """θ'(a) = θ(a^t): the ring isomorphism attached to the anti-map θ."""
    AntiIsomorphism(d)
    return AutomorphismDescriptor(d.field, psi=False, frob=d.frob, inner=d.inner)


def anti_to_group_automorphism(d: AutomorphismDescriptor) -> AutomorphismDescriptor:
    """g -> θ(g^-1) = θ'((g^-1)^t), the group automorphism with ψ set."""
    AntiIsomorphism(d)
    return AutomorphismDescriptor(d.field, psi=True, frob=d.frob, inner=d.inner)


# ----------------------------------------------------------------------
# Homothety twists and the center
# ----------------------------------------------------------------------


def twisted_apply(
    chi: Callable[[PeriodicMatrix], FieldElement],
    d: AutomorphismDescriptor,
    g: PeriodicMatrix,
) -> PeriodicMatrix:
    """χ(g) · apply(d, g) for a central homothety χ."""
    return scalar_mul(chi(g), apply(d, g))


def center_automorphism(d: AutomorphismDescriptor) -> int:
    """
    The Frobenius power f with d(α·1) = α^(p^f)·1, read off from the action of
    d on the scalar generator.

    Raises
    ------
    ValueError
        If d carries ψ (it inverts scalars and is not additive on the center).
    """
    if d.psi:
        raise ValueError("ψ does not restrict to a field automorphism of the center")
    omega = d.field.generator()
    image = apply(d, scalar(d.field, omega)).rows[0][0]
    for f in range(d.field.k):
        if frobenius(omega, f) == image:
            return f
    raise FieldError(f"no Frobenius power maps {omega} to {image}")
