"""
Relative determinant tests for locmat.
"""

import pytest

from locmat.errors import MixedFieldsError, NotDivisibleError, PeriodNotDividesIndexError
from locmat.io.steinitz_parser import parse_steinitz
from locmat.models.fields import RootTower
from locmat.models.permatrix import identity, make, mul, scalar
from locmat.processors.groups import commutator
from locmat.processors.homothety import (
    RelativeDeterminant,
    central_homothety_from_detr,
    det_r,
    det_r_at,
    evaluation_levels,
    verify_homothety,
)
from locmat.utils.sampling import random_invertible, random_matrix


@pytest.fixture
def rd(gf5):
    """det_r over GF(5) with index 3^inf."""
    return RelativeDeterminant(RootTower(gf5, parse_steinitz("3^inf")))


class TestRelativeDeterminant:
    """det_r(a) = tau_n(det at level n)."""

    def test_scalar(self, gf5, rd):
        assert det_r(rd, scalar(gf5, 2)) == 2
        assert det_r(rd, identity(gf5)) == 1

    def test_period_three(self, gf5, rd):
        A = make(gf5, 3, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert det_r(rd, A) == 3

    def test_level_independence(self, gf5, rd, rng):
        A = random_invertible(gf5, 3, rng)
        assert det_r_at(rd, A, 3) == det_r_at(rd, A, 9) == det_r(rd, A)

    def test_multiplicative(self, gf5, rd, rng):
        g = random_invertible(gf5, 3, rng)
        h = random_invertible(gf5, 1, rng)
        assert det_r(rd, mul(g, h)) == det_r(rd, g) * det_r(rd, h)

    def test_trivial_on_commutators(self, gf5, rd, rng):
        g = random_invertible(gf5, 3, rng)
        h = random_invertible(gf5, 3, rng)
        assert det_r(rd, commutator(g, h)) == 1

    def test_zero_exactly_on_singular(self, gf5, rd):
        singular = make(gf5, 3, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])
        assert det_r(rd, singular) == 0

    def test_period_outside_index(self, upper_transvection, rd):
        with pytest.raises(PeriodNotDividesIndexError):
            det_r(rd, upper_transvection)

    def test_level_checks(self, gf5, rd):
        A = make(gf5, 3, [[2, 0, 0], [0, 1, 0], [0, 0, 1]])
        with pytest.raises(NotDivisibleError):
            det_r_at(rd, A, 1)
        with pytest.raises(PeriodNotDividesIndexError):
            det_r_at(rd, A, 6)

    def test_wrong_field(self, gf7, rd):
        with pytest.raises(MixedFieldsError):
            det_r(rd, scalar(gf7, 2))

    def test_evaluation_levels(self, rd):
        assert evaluation_levels(rd, 1) == [1, 3, 9]
        assert evaluation_levels(rd, 3, count=2) == [3, 9]


class TestCentralHomothety:
    """The homothety handle and its self-check."""

    def test_handle_matches_det_r(self, gf5, rd, rng):
        handle = central_homothety_from_detr(rd)
        A = random_matrix(gf5, 3, rng)
        assert handle(A) == det_r(rd, A)

    def test_verify_homothety(self, gf5, rd, rng):
        handle = central_homothety_from_detr(rd)
        samples = [
            (random_invertible(gf5, 3, rng), random_invertible(gf5, 1, rng))
            for _ in range(5)
        ]
        progress = []
        report = verify_homothety(handle, samples, progress_cb=lambda done, total: progress.append((done, total)))
        assert report.ok
        assert report.checks == 1 + 3 * len(samples)
        assert progress[-1] == (5, 5)
