"""
Relative determinant and the central homothety it induces.

For a finite field F with a root tower τ over the Steinitz number s,
det_r(a) = τ_n(det_{M_n}(a)) for any level n with period(a) | n | s. The value
does not depend on n, is multiplicative, is trivial on commutators and is
nonzero exactly on invertible elements.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from locmat.errors import MixedFieldsError, NotDivisibleError, PeriodNotDividesIndexError
from locmat.models.fields import FieldElement, RootTower, tau
from locmat.models.permatrix import PeriodicMatrix, det_at, identity, mul
from locmat.models.steinitz import SteinitzNumber
from locmat.processors.groups import commutator

logger = logging.getLogger(__name__)

# How many levels n, n k1, n k2, ... the level-independence check compares
LEVELS_PER_SAMPLE = 3
LEVEL_SCAN_LIMIT = 64


@dataclass(frozen=True, slots=True)
class RelativeDeterminant:
    tower: RootTower

    @property
    def index(self) -> SteinitzNumber:
        return self.tower.index

    def _check(self, A: PeriodicMatrix) -> None:
        if A.field != self.tower.field:
            raise MixedFieldsError(f"matrix over {A.field}, tower over {self.tower.field}")
        if not self.index.has_divisor(A.period):
            raise PeriodNotDividesIndexError(
                f"period {A.period} does not divide the index {self.index}"
            )


def det_r(rd: RelativeDeterminant, A: PeriodicMatrix) -> FieldElement:
    """
    τ_n(det_at(A, n)) at the minimal period n of A.

    Raises
    ------
    PeriodNotDividesIndexError
        If the period of A does not divide the tower index.
    MixedFieldsError
        If A is not over the tower field.
    """
    rd._check(A)
    return tau(rd.tower, A.period, det_at(A, A.period))


def det_r_at(rd: RelativeDeterminant, A: PeriodicMatrix, m: int) -> FieldElement:
    """det_r evaluated at an explicit level m with period(A) | m | s."""
    rd._check(A)
    if m % A.period != 0:
        raise NotDivisibleError(f"period {A.period} does not divide {m}")
    if not rd.index.has_divisor(m):
        raise PeriodNotDividesIndexError(f"level {m} does not divide the index {rd.index}")
    return tau(rd.tower, m, det_at(A, m))


def evaluation_levels(rd: RelativeDeterminant, n: int, count: int = LEVELS_PER_SAMPLE) -> List[int]:
    """The first ``count`` multiples of n (up to n * LEVEL_SCAN_LIMIT) dividing the index."""
    levels = []
    for k in range(1, LEVEL_SCAN_LIMIT + 1):
        if rd.index.has_divisor(n * k):
            levels.append(n * k)
            if len(levels) == count:
                break
    return levels


@dataclass(frozen=True, slots=True)
class CentralHomothety:
    """The multiplicative map A* -> F*, a -> det_r(a)."""

    rd: RelativeDeterminant

    def __call__(self, A: PeriodicMatrix) -> FieldElement:
        return det_r(self.rd, A)


def central_homothety_from_detr(rd: RelativeDeterminant) -> CentralHomothety:
    return CentralHomothety(rd)


@dataclass(slots=True)
class HomothetyReport:
    checks: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def record(self, passed: bool, description: str) -> None:
        self.checks += 1
        if not passed:
            self.counterexamples.append(description)


def verify_homothety(
    handle: CentralHomothety,
    samples: Sequence[Tuple[PeriodicMatrix, PeriodicMatrix]],
    progress_cb: Optional[Callable[[int, int], None]] = None,
) -> HomothetyReport:
    """
    Check the homothety laws on pairs of invertible samples (g, h).

    Per pair: det_r(gh) = det_r(g) det_r(h), det_r([g, h]) = 1, and
    level independence for g. det_r(1) = 1 is checked once.
    """
    rd = handle.rd
    report = HomothetyReport()
    report.record(handle(identity(rd.tower.field)) == 1, "det_r(1) != 1")

    total = len(samples)
    for idx, (g, h) in enumerate(samples):
        dg, dh = handle(g), handle(h)
        report.record(handle(mul(g, h)) == dg * dh, f"det_r(gh) != det_r(g) det_r(h) for {g}, {h}")
        report.record(handle(commutator(g, h)) == 1, f"det_r([g,h]) != 1 for {g}, {h}")
        values = {det_r_at(rd, g, m) for m in evaluation_levels(rd, g.period)}
        report.record(len(values) == 1, f"det_r of {g} depends on the level: {sorted(map(str, values))}")
        if progress_cb:
            progress_cb(idx + 1, total)

    if report.ok:
        logger.info(f"Homothety verified: {report.checks} checks")
    else:
        logger.warning(f"Homothety failed {len(report.counterexamples)} of {report.checks} checks")
    return report
