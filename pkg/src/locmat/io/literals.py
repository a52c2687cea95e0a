"""
Text literals for fields and field elements.

Descriptors: ``Q``, ``GF(p)``, ``GF(p,k)``, optionally followed by
``;mod=[c0,...,ck]`` (ascending coefficients). Elements:
``<descriptor>:<payload>`` where the payload is ``<int>[/<int>]`` for Q, an
integer in 0..p-1 for GF(p) and ``[c0,c1,...]`` for GF(p,k).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional

from locmat.constants import DEFAULT_MODULI
from locmat.errors import FieldError, LiteralSyntaxError
from locmat.models.fields import (
    FieldDescriptor,
    FieldElement,
    FieldKind,
    extension_field,
    prime_field,
    rationals,
)

_DESCRIPTOR = re.compile(
    r"^\s*(?:(?P<q>Q)|GF\(\s*(?P<p>\d+)\s*(?:,\s*(?P<k>\d+)\s*)?\))"
    r"\s*(?:;\s*mod\s*=\s*\[(?P<mod>[^\]]*)\])?\s*$"
)
_RATIONAL = re.compile(r"^\s*(?P<num>[+-]?\d+)\s*(?:/\s*(?P<den>[+-]?\d+)\s*)?$")
_INTEGER = re.compile(r"^\s*(?P<value>[+-]?\d+)\s*$")
_VECTOR = re.compile(r"^\s*\[(?P<body>[^\]]*)\]\s*$")


def _int_list(body: str, text: str) -> List[int]:
    body = body.strip()
    if not body:
        return []
    try:
        return [int(part) for part in body.split(",")]
    except ValueError:
        raise LiteralSyntaxError(f"malformed coefficient list in {text!r}") from None


def parse_descriptor(text: str) -> FieldDescriptor:
    """Parse ``Q``, ``GF(p)`` or ``GF(p,k)[;mod=[...]]``."""
    match = _DESCRIPTOR.match(text)
    if match is None:
        raise LiteralSyntaxError(f"malformed field descriptor {text!r}")
    if match.group("q"):
        if match.group("mod") is not None:
            raise LiteralSyntaxError(f"Q takes no modulus: {text!r}")
        return rationals()
    p = int(match.group("p"))
    k = int(match.group("k") or 1)
    modulus = match.group("mod")
    if modulus is None:
        return extension_field(p, k)
    if k == 1:
        raise LiteralSyntaxError(f"GF({p}) takes no modulus: {text!r}")
    return extension_field(p, k, _int_list(modulus, text))


def format_descriptor(field: FieldDescriptor) -> str:
    if field.kind is FieldKind.RATIONALS:
        return "Q"
    if field.kind is FieldKind.PRIME:
        return f"GF({field.p})"
    text = f"GF({field.p},{field.k})"
    if DEFAULT_MODULI.get((field.p, field.k)) != field.modulus:
        text += ";mod=[" + ",".join(str(c) for c in field.modulus) + "]"
    return text


def parse_payload(field: FieldDescriptor, text: str) -> FieldElement:
    """Parse the part of an element literal after the colon."""
    if field.kind is FieldKind.RATIONALS:
        match = _RATIONAL.match(text)
        if match is None:
            raise LiteralSyntaxError(f"malformed rational {text!r}")
        den = int(match.group("den") or 1)
        if den == 0:
            raise LiteralSyntaxError(f"zero denominator in {text!r}")
        return field.element(Fraction(int(match.group("num")), den))
    if field.kind is FieldKind.PRIME:
        match = _INTEGER.match(text)
        if match is None:
            raise LiteralSyntaxError(f"malformed GF({field.p}) value {text!r}")
        value = int(match.group("value"))
        if not 0 <= value < field.p:
            raise FieldError(f"value {value} out of GF({field.p}); expected 0..{field.p - 1}")
        return field.element(value)
    match = _VECTOR.match(text)
    if match is None:
        raise LiteralSyntaxError(f"malformed coefficient vector {text!r}")
    coeffs = _int_list(match.group("body"), text)
    if len(coeffs) != field.k:
        raise FieldError(f"expected {field.k} coefficients, got {len(coeffs)} in {text!r}")
    if any(not 0 <= c < field.p for c in coeffs):
        raise FieldError(f"coefficients of {text!r} out of GF({field.p})")
    return field.element(coeffs)


def format_payload(x: FieldElement) -> str:
    kind = x.field.kind
    if kind is FieldKind.RATIONALS:
        value = x.value
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if kind is FieldKind.PRIME:
        return str(x.value)
    return "[" + ",".join(str(c) for c in x.value) + "]"


def parse_element(text: str, field: Optional[FieldDescriptor] = None) -> FieldElement:
    """
    Parse ``<descriptor>:<payload>``.

    When ``field`` is given a bare payload is accepted as well; a full literal
    must then name the same field.
    """
    descriptor_text, sep, payload = text.partition(":")
    if not sep:
        if field is None:
            raise LiteralSyntaxError(f"element literal {text!r} lacks a field prefix")
        return parse_payload(field, text)
    literal_field = parse_descriptor(descriptor_text)
    if field is not None and literal_field != field:
        raise FieldError(f"literal {text!r} is not in {format_descriptor(field)}")
    return parse_payload(literal_field, payload)


def format_element(x: FieldElement) -> str:
    return f"{format_descriptor(x.field)}:{format_payload(x)}"
