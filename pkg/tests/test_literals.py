"""
Field and element literal tests for locmat.
"""

from fractions import Fraction

import pytest

from locmat.errors import FieldError, LiteralSyntaxError
from locmat.io.literals import (
    format_descriptor,
    format_element,
    parse_descriptor,
    parse_element,
)
from locmat.models.fields import extension_field


class TestDescriptorLiterals:
    """Q, GF(p) and GF(p,k) descriptors."""

    def test_parse(self, gf5, gf25, q_field):
        assert parse_descriptor("Q") == q_field
        assert parse_descriptor("GF(5)") == gf5
        assert parse_descriptor(" GF( 5 , 2 ) ") == gf25

    def test_default_modulus_is_implicit(self, gf25):
        assert format_descriptor(gf25) == "GF(5,2)"

    def test_custom_modulus_is_written(self):
        F = parse_descriptor("GF(5,2);mod=[2,0,1]")
        assert F == extension_field(5, 2, [2, 0, 1])
        assert format_descriptor(F) == "GF(5,2);mod=[2,0,1]"

    @pytest.mark.parametrize("text", ["R", "GF(5", "Q;mod=[1,1]", "GF(5);mod=[1,1]"])
    def test_malformed(self, text):
        with pytest.raises(LiteralSyntaxError):
            parse_descriptor(text)

    def test_bad_field_values(self):
        with pytest.raises(FieldError):
            parse_descriptor("GF(3)")


class TestElementLiterals:
    """<descriptor>:<payload> element literals."""

    def test_prime_field(self, gf5):
        assert parse_element("GF(5):3") == gf5.element(3)

    def test_rational(self, q_field):
        x = parse_element("Q:-7/2")
        assert x == q_field.element(Fraction(-7, 2))
        assert format_element(x) == "Q:-7/2"
        assert format_element(q_field.element(4)) == "Q:4"

    def test_extension(self, gf25):
        x = parse_element("GF(5,2):[0,1]")
        assert x == gf25.generator()
        assert format_element(x) == "GF(5,2):[0,1]"

    def test_out_of_range_payload(self):
        with pytest.raises(FieldError):
            parse_element("GF(5):7")
        with pytest.raises(FieldError):
            parse_element("GF(5,2):[1]")

    def test_zero_denominator(self):
        with pytest.raises(LiteralSyntaxError):
            parse_element("Q:1/0")

    def test_bare_payload_needs_field(self, gf5):
        with pytest.raises(LiteralSyntaxError):
            parse_element("3")
        assert parse_element("3", gf5) == 3

    def test_literal_must_match_field(self, gf5):
        with pytest.raises(FieldError):
            parse_element("GF(7):3", gf5)

    def test_syntax_errors_are_field_errors(self):
        assert issubclass(LiteralSyntaxError, FieldError)
        assert issubclass(LiteralSyntaxError, ValueError)
