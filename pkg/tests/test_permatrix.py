"""
Periodic matrix tests for locmat.
Covers canonical periods, ring operations, determinants at a level and the block view.
"""

import numpy as np
import pytest

from locmat.errors import (
    FieldError,
    IndexRangeError,
    MixedFieldsError,
    NotDivisibleError,
    SingularMatrixError,
)
from locmat.models.permatrix import (
    add,
    block_to_global,
    block_view,
    contains_level,
    det_at,
    diag_unit,
    ebar,
    embed,
    global_to_block,
    identity,
    inverse,
    is_block_diagonal,
    is_block_transvection,
    make,
    minimal_period,
    mul,
    outer_support,
    power,
    scalar,
    transpose,
    transvection,
    unblock,
)
from locmat.utils.sampling import random_invertible, random_matrix
from locmat.validation.oracles import leibniz_det, product_entry

from test_data import SINGULAR_BLOCK


# ============================================================================
# CANONICAL FORM
# ============================================================================

class TestCanonicalForm:
    """Values are stored at their minimal period."""

    def test_scalar_collapses(self, gf5):
        A = make(gf5, 2, [[3, 0], [0, 3]])
        assert A.period == 1
        assert A == scalar(gf5, 3)

    def test_repeated_block_collapses(self, gf5):
        A = make(gf5, 4, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]])
        assert A.period == 2
        assert A == transvection(gf5, 2, 1, 2, 1)

    def test_minimal_period_is_stable(self, upper_transvection):
        assert minimal_period(upper_transvection) == 2

    def test_ebar_has_period_n(self, gf5):
        E = ebar(gf5, 2, 4, 1)
        assert E.period == 2
        assert E == make(gf5, 2, [[1, 0], [0, 0]])

    def test_shape_checked(self, gf5):
        with pytest.raises(ValueError):
            make(gf5, 2, [[1, 0]])

    def test_str(self, upper_transvection):
        assert str(upper_transvection) == "PeriodicMatrix(period=2, [1 1; 0 1])"

    def test_infinite_entries(self, upper_transvection):
        assert upper_transvection.entry(1, 2) == 1
        assert upper_transvection.entry(3, 4) == 1
        assert upper_transvection.entry(2, 3) == 0
        assert upper_transvection.entry(1001, 1002) == 1
        with pytest.raises(IndexRangeError):
            upper_transvection.entry(0, 1)


# ============================================================================
# RING OPERATIONS
# ============================================================================

class TestRingOperations:
    """Sums and products lift to the lcm of the periods."""

    def test_mixed_period_product(self, gf5):
        t = transvection(gf5, 2, 1, 2, 1)
        two = make(gf5, 3, [[2, 0, 0], [0, 2, 0], [0, 0, 2]])
        assert mul(t, two) == make(gf5, 2, [[2, 2], [0, 2]])

    def test_lcm_period(self, gf5):
        A = transvection(gf5, 2, 1, 2, 1)
        B = transvection(gf5, 3, 2, 3, 1)
        assert (A @ B).period == 6

    def test_operators(self, gf5, upper_transvection):
        assert 2 * upper_transvection == make(gf5, 2, [[2, 2], [0, 2]])
        assert upper_transvection - upper_transvection == scalar(gf5, 0)
        assert -upper_transvection + upper_transvection == scalar(gf5, 0)

    def test_mixed_fields(self, gf5, gf7):
        with pytest.raises(MixedFieldsError):
            add(identity(gf5), identity(gf7))

    def test_inverse(self, gf5, rotation):
        assert mul(rotation, inverse(rotation)) == identity(gf5)
        assert power(rotation, -1) == inverse(rotation)

    def test_singular_inverse(self, gf5):
        with pytest.raises(SingularMatrixError):
            inverse(make(gf5, 2, SINGULAR_BLOCK))

    def test_power(self, gf5, upper_transvection, rotation):
        assert power(upper_transvection, 5) == identity(gf5)
        assert power(rotation, 4) == identity(gf5)
        assert power(rotation, 0) == identity(gf5)

    def test_transpose(self, gf5, upper_transvection):
        assert transpose(upper_transvection) == transvection(gf5, 2, 2, 1, 1)

    def test_product_entry_oracle(self, gf7, rng):
        A = random_matrix(gf7, 2, rng)
        B = random_matrix(gf7, 3, rng)
        AB = mul(A, B)
        for i in range(1, 13):
            for j in range(1, 13):
                assert AB.entry(i, j) == product_entry(A, B, i, j)

    def test_contains_level(self):
        assert contains_level(2, 4)
        assert not contains_level(3, 4)


# ============================================================================
# DETERMINANTS
# ============================================================================

class TestDeterminant:
    """det_at(A, m) for period(A) | m."""

    def test_scalar_at_level_three(self, gf5):
        assert det_at(scalar(gf5, 2), 3) == 3

    def test_power_rule(self, gf7, rng):
        A = random_invertible(gf7, 3, rng)
        assert det_at(A, 6) == det_at(A, 3) ** 2
        assert det_at(A, 12) == det_at(A, 3) ** 4

    def test_leibniz_oracle(self, gf25, rng):
        A = random_matrix(gf25, 4, rng)
        assert det_at(A, A.period) == leibniz_det(A, A.period)

    def test_level_must_be_multiple(self, upper_transvection):
        with pytest.raises(NotDivisibleError):
            det_at(upper_transvection, 3)
        with pytest.raises(NotDivisibleError):
            embed(upper_transvection, 3)

    def test_rational_determinant(self, q_field):
        A = make(q_field, 2, [[1, 2], [3, 4]])
        assert det_at(A, 2) == -2
        assert det_at(A, 4) == 4


# ============================================================================
# GENERATORS
# ============================================================================

class TestGenerators:
    """Transvections and diagonal units."""

    def test_transvection_indices(self, gf5):
        with pytest.raises(ValueError):
            transvection(gf5, 2, 1, 1, 1)
        with pytest.raises(IndexRangeError):
            transvection(gf5, 2, 1, 3, 1)

    def test_zero_transvection_is_identity(self, gf5):
        assert transvection(gf5, 3, 1, 2, 0) == identity(gf5)

    def test_diag_unit(self, gf5):
        D = diag_unit(gf5, 2, 3)
        assert D == make(gf5, 2, [[3, 0], [0, 1]])
        assert det_at(D, 2) == 3
        with pytest.raises(FieldError):
            diag_unit(gf5, 2, 0)


# ============================================================================
# BLOCK VIEW
# ============================================================================

class TestBlockView:
    """Re-indexing M_q(F) as M_n(M_k(F))."""

    def test_index_map(self):
        assert global_to_block(3, 2) == (1, 2)
        assert global_to_block(4, 2) == (2, 2)
        assert block_to_global(1, 2, 2) == 3

    def test_entry_placement(self, gf5):
        A = make(gf5, 4, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]])
        view = block_view(A, 4, 2)
        assert view.outer == 2 and view.inner == 2
        # global (3, 3) is outer (1, 1), inner (2, 2)
        assert view.entries[0, 0, 1, 1] == 3
        assert bool((view.block(1, 1) == np.array([[1, 0], [0, 3]], dtype=object)).all())
        assert bool((view.block(2, 2) == np.array([[2, 0], [0, 4]], dtype=object)).all())
        assert view.is_zero_block(1, 2)

    def test_unblock_inverts(self, gf7, rng):
        A = random_matrix(gf7, 6, rng)
        for n in (1, 2, 3, 6):
            assert unblock(block_view(A, 6, n)) == A

    def test_block_product(self, gf7, rng):
        A = random_matrix(gf7, 4, rng)
        B = random_matrix(gf7, 2, rng)
        assert block_view(mul(A, B), 4, 2) == block_view(A, 4, 2) @ block_view(B, 4, 2)
        assert block_view(add(A, B), 4, 2) == block_view(A, 4, 2) + block_view(B, 4, 2)

    def test_divisibility_checked(self, gf5, upper_transvection):
        with pytest.raises(NotDivisibleError):
            block_view(upper_transvection, 4, 3)
        with pytest.raises(NotDivisibleError):
            block_view(upper_transvection, 3, 3)

    def test_block_shapes(self, gf5):
        same_outer = transvection(gf5, 4, 1, 3, 1)
        cross = transvection(gf5, 4, 1, 2, 1)
        assert outer_support(cross, 4, 2) == [(1, 1), (1, 2), (2, 2)]
        assert is_block_transvection(cross, 4, 2)
        assert not is_block_transvection(same_outer, 4, 2)
        assert is_block_diagonal(same_outer, 4, 2)
        assert not is_block_diagonal(cross, 4, 2)
