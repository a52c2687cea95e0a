"""
Group tests for locmat.
Covers GL/SL membership, commutators, decompositions and block-ring rewriting.
"""

import pytest

from locmat.errors import DetNotOneError, NotDivisibleError, SingularMatrixError
from locmat.io.steinitz_parser import parse_steinitz
from locmat.models.permatrix import (
    det_at,
    diag_unit,
    identity,
    inverse,
    is_block_diagonal,
    is_block_transvection,
    make,
    scalar,
    transvection,
)
from locmat.processors.groups import (
    DiagUnit,
    GroupWord,
    SLMembership,
    Transvection,
    commutator,
    decompose_gl,
    decompose_transvections,
    evaluate,
    ge_rewrite,
    gl_membership,
    lemma1_rewrite,
    sl_membership,
    sl_membership_oracle,
    steinberg_check,
)
from locmat.utils.sampling import random_element, random_invertible, random_sl

from test_data import ROTATION_WORD, SINGULAR_BLOCK


# ============================================================================
# MEMBERSHIP
# ============================================================================

class TestMembership:
    """GL_s and SL_s membership."""

    def test_scalar_two_over_gf5(self, gf5):
        two = scalar(gf5, 2)
        result = sl_membership(two, parse_steinitz("2^inf"))
        assert result == SLMembership(True, 4)
        assert str(result) == "member level=4"

    def test_not_member_at_small_level(self, gf5):
        result = sl_membership(scalar(gf5, 2), parse_steinitz("2"))
        assert not result.member
        assert str(result) == "not-member"

    def test_rotation_is_member_at_its_period(self, rotation):
        assert sl_membership(rotation, parse_steinitz("2")) == SLMembership(True, 2)
        assert not sl_membership(rotation, parse_steinitz("3^inf")).member

    def test_rationals(self, q_field):
        assert sl_membership(scalar(q_field, -1), parse_steinitz("2")) == SLMembership(True, 2)
        assert not sl_membership(scalar(q_field, 2), parse_steinitz("omega")).member

    def test_singular_is_never_member(self, gf5):
        A = make(gf5, 2, SINGULAR_BLOCK)
        assert not sl_membership(A, parse_steinitz("omega")).member
        assert not gl_membership(A, parse_steinitz("omega"))

    def test_oracle_agrees(self, gf7, rng):
        s = parse_steinitz("2^inf * 3^inf")
        for _ in range(10):
            A = random_invertible(gf7, 2, rng)
            assert sl_membership(A, s) == sl_membership_oracle(A, s)

    def test_gl_membership(self, upper_transvection):
        assert gl_membership(upper_transvection, parse_steinitz("2"))
        assert not gl_membership(upper_transvection, parse_steinitz("3"))


# ============================================================================
# COMMUTATORS
# ============================================================================

class TestCommutators:
    """[g, h] = g h g^-1 h^-1."""

    def test_steinberg_relation(self, gf5):
        a = gf5.element(3)
        lhs = commutator(transvection(gf5, 3, 1, 2, 1), transvection(gf5, 3, 2, 3, a))
        assert lhs == transvection(gf5, 3, 1, 3, a)

    def test_steinberg_check(self, gf25):
        assert steinberg_check(gf25, 5, 4, 2, 1, gf25.generator())
        with pytest.raises(ValueError):
            steinberg_check(gf25, 3, 1, 1, 2, 1)

    @pytest.mark.parametrize("size", [3, 4, 5, 6])
    def test_steinberg_all_triples(self, gf5, size):
        a = gf5.element(3)
        triples = [
            (i, r, j)
            for i in range(1, size + 1)
            for r in range(1, size + 1)
            for j in range(1, size + 1)
            if len({i, r, j}) == 3
        ]
        assert len(triples) == size * (size - 1) * (size - 2)
        assert all(steinberg_check(gf5, size, i, r, j, a) for i, r, j in triples)

    def test_commutator_has_det_one(self, gf7, rng):
        g = random_invertible(gf7, 2, rng)
        h = random_invertible(gf7, 3, rng)
        assert det_at(commutator(g, h), 6) == 1

    def test_singular_commutator(self, gf5, upper_transvection):
        with pytest.raises(SingularMatrixError):
            commutator(make(gf5, 2, SINGULAR_BLOCK), upper_transvection)


# ============================================================================
# DECOMPOSITION
# ============================================================================

class TestDecomposition:
    """Constructive SL and GL decompositions at a level."""

    def test_rotation_word(self, gf5, rotation):
        word = decompose_transvections(rotation, 2)
        expected = tuple(Transvection(i, j, gf5.element(a), 2) for i, j, a in ROTATION_WORD)
        assert word.factors == expected
        assert evaluate(word) == rotation

    def test_identity_is_empty_word(self, gf5):
        assert len(decompose_transvections(identity(gf5), 3)) == 0
        assert len(decompose_gl(identity(gf5), 3)) == 0

    def test_random_sl(self, gf7, rng):
        for m in (2, 3, 4, 6):
            A = random_sl(gf7, m, rng)
            word = decompose_transvections(A, m)
            assert evaluate(word) == A
            assert word.transvection_count() == len(word)
            assert len(word) <= m * m + m

    def test_det_must_be_one(self, gf5):
        with pytest.raises(DetNotOneError):
            decompose_transvections(scalar(gf5, 2), 2)

    def test_level_must_be_multiple(self, rotation):
        with pytest.raises(NotDivisibleError):
            decompose_transvections(rotation, 3)

    def test_gl_diagonal_unit(self, gf5):
        D = diag_unit(gf5, 2, 3)
        word = decompose_gl(D, 2)
        assert word.factors == (DiagUnit(1, gf5.element(3), 2),)
        assert evaluate(word) == D

    def test_random_gl(self, gf7, rng):
        for m in (1, 2, 3, 4):
            A = random_invertible(gf7, m, rng)
            word = decompose_gl(A, m)
            assert evaluate(word) == A
            d = det_at(A, m)
            assert [u.alpha for u in word.diagonal_tokens()] == ([] if d == 1 else [d])

    def test_gl_singular(self, gf5):
        with pytest.raises(SingularMatrixError):
            decompose_gl(make(gf5, 2, SINGULAR_BLOCK), 2)

    def test_word_inverse(self, gf7, rng):
        A = random_invertible(gf7, 3, rng)
        word = decompose_gl(A, 3)
        assert evaluate(word.inverse()) == inverse(A)

    def test_token_period_must_divide(self, gf5):
        with pytest.raises(ValueError):
            GroupWord(gf5, 3, (Transvection(1, 2, gf5.one(), 2),))


# ============================================================================
# BLOCK-RING REWRITING
# ============================================================================

class TestBlockRewrite:
    """t_ij(a) in M_q(F) as transvections of M_n(M_k(F))."""

    def test_cross_block_is_unchanged(self, gf5):
        a = gf5.element(2)
        word = lemma1_rewrite(1, 2, a, 4, 2)
        assert word.factors == (Transvection(1, 2, a, 4),)

    def test_same_block_uses_auxiliary_index(self, gf5):
        a = gf5.element(2)
        one = gf5.one()
        word = lemma1_rewrite(1, 3, a, 4, 2)
        assert word.factors == (
            Transvection(1, 2, one, 4),
            Transvection(2, 3, a, 4),
            Transvection(1, 2, -one, 4),
            Transvection(2, 3, -a, 4),
        )
        assert evaluate(word) == transvection(gf5, 4, 1, 3, a)
        assert all(is_block_transvection(t.matrix(), 4, 2) for t in word.factors)

    @pytest.mark.parametrize("n,q", [(2, 4), (4, 8), pytest.param(4, 12, marks=pytest.mark.slow)])
    def test_all_index_pairs(self, gf5, rng, n, q):
        alphas = [random_element(gf5, rng, nonzero=True) for _ in range(20)]
        for i in range(1, q + 1):
            for j in range(1, q + 1):
                if i == j:
                    continue
                for a in alphas:
                    word = lemma1_rewrite(i, j, a, q, n)
                    assert evaluate(word) == transvection(gf5, q, i, j, a)
                    assert all(is_block_transvection(t.matrix(), q, n) for t in word.factors)

    def test_no_auxiliary_index(self, gf5):
        with pytest.raises(ValueError):
            lemma1_rewrite(1, 2, gf5.one(), 2, 1)

    def test_n_must_divide_q(self, gf5):
        with pytest.raises(NotDivisibleError):
            lemma1_rewrite(1, 2, gf5.one(), 4, 3)

    def test_ge_rewrite(self, gf7, rng):
        A = random_invertible(gf7, 4, rng)
        word = ge_rewrite(A, 4, 2)
        assert evaluate(word) == A
        for token in word.factors:
            if isinstance(token, Transvection):
                assert is_block_transvection(token.matrix(), 4, 2)
            else:
                assert is_block_diagonal(token.matrix(), 4, 2)
