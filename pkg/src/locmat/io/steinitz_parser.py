"""
Parser and formatter for Steinitz expressions.

Grammar (ASCII, whitespace insignificant)::

    expr    := factor ('*' factor)*
    factor  := INT | INT '^' (INT | 'inf') | 'omega' [exceptions]
             | ('lcm' | 'gcd') '(' expr (',' expr)* ')'
    exceptions := '(' INT '^' INT (',' INT '^' INT)* ')'

``omega(2^3, 5^0)`` is every prime to the power infinity except 2^3 and 5^0;
it is the only way to write default-infinite numbers with finite exceptions,
so ``format_steinitz`` uses it for exactly those numbers.
"""

from __future__ import annotations

import logging
import re
from typing import List, Tuple

from sympy import isprime

from locmat.errors import SteinitzSyntaxError
from locmat.models.steinitz import (
    INFINITY,
    SteinitzNumber,
    from_integer,
    gcd,
    lcm,
    multiply,
)

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z]+)|(?P<sym>[\^*(),]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    """Split text into (kind, value, position) tokens."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise SteinitzSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, value.lower() if kind == "word" else value, match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self._tokens = _tokenize(text)
        self._index = 0

    @property
    def _current(self) -> Tuple[str, str, int]:
        return self._tokens[self._index]

    def _advance(self) -> Tuple[str, str, int]:
        token = self._current
        self._index += 1
        return token

    def _expect(self, value: str) -> None:
        kind, got, pos = self._current
        if got != value or kind == "end":
            raise SteinitzSyntaxError(f"expected {value!r}, found {got or 'end of input'!r}", pos)
        self._advance()

    def parse(self) -> SteinitzNumber:
        result = self._expr()
        kind, value, pos = self._current
        if kind != "end":
            raise SteinitzSyntaxError(f"unexpected {value!r}", pos)
        return result

    def _expr(self) -> SteinitzNumber:
        result = self._factor()
        while self._current[1] == "*":
            self._advance()
            result = multiply(result, self._factor())
        return result

    def _prime_power(self) -> Tuple[int, object]:
        kind, value, pos = self._advance()
        if kind != "int":
            raise SteinitzSyntaxError(f"expected a prime, found {value or 'end of input'!r}", pos)
        base = int(value)
        if not isprime(base):
            raise SteinitzSyntaxError(f"base {base} is not prime", pos)
        self._expect("^")
        kind, value, pos = self._advance()
        if kind == "int":
            return base, int(value)
        if kind == "word" and value == "inf":
            return base, INFINITY
        raise SteinitzSyntaxError(f"expected an exponent, found {value or 'end of input'!r}", pos)

    def _factor(self) -> SteinitzNumber:
        kind, value, pos = self._current
        if kind == "int":
            self._advance()
            if self._current[1] != "^":
                n = int(value)
                if n == 0:
                    raise SteinitzSyntaxError("Steinitz numbers have no zero", pos)
                return from_integer(n)
            self._index -= 1
            base, exponent = self._prime_power()
            return SteinitzNumber.from_exponents({base: exponent})
        if kind == "word" and value == "omega":
            self._advance()
            if self._current[1] != "(":
                return SteinitzNumber.omega()
            self._advance()
            exceptions = {}
            while True:
                base, exponent = self._prime_power()
                if exponent == INFINITY:
                    raise SteinitzSyntaxError("omega exceptions must be finite", pos)
                exceptions[base] = exponent
                if self._current[1] != ",":
                    break
                self._advance()
            self._expect(")")
            return SteinitzNumber.from_exponents(exceptions, INFINITY)
        if kind == "word" and value in ("lcm", "gcd"):
            self._advance()
            self._expect("(")
            args = [self._expr()]
            while self._current[1] == ",":
                self._advance()
                args.append(self._expr())
            self._expect(")")
            return lcm(args) if value == "lcm" else gcd(args)
        raise SteinitzSyntaxError(f"unexpected {value or 'end of input'!r}", pos)


def parse_steinitz(text: str) -> SteinitzNumber:
    """
    Parse a Steinitz expression.

    Raises
    ------
    SteinitzSyntaxError
        On malformed input, with the character position of the problem.
    """
    result = _Parser(text).parse()
    logger.debug(f"Parsed {text!r} -> {result.explicit}, default {result.default_exp}")
    return result


def _format_power(p: int, e) -> str:
    if e == INFINITY:
        return f"{p}^inf"
    if e == 1:
        return str(p)
    return f"{p}^{e}"


def format_steinitz(s: SteinitzNumber) -> str:
    """Render s with ascending primes, '*' separators and 'inf' for infinity."""
    if s.default_exp == INFINITY:
        if not s.explicit:
            return "omega"
        return "omega(" + ", ".join(f"{p}^{e}" for p, e in s.explicit) + ")"
    if not s.explicit:
        return "1"
    return " * ".join(_format_power(p, e) for p, e in s.explicit)
