"""Parser for seed expressions such as ``"3*z^4 - z + 1/2"``.

Grammar (whitespace is ignored between tokens)::

    expr     := sign? term (('+' | '-') term)*
    term     := rational ('*'? 'z' ('^' uint)?)? | 'z' ('^' uint)?
    rational := int ('/' uint)?
"""
from __future__ import annotations

from fractions import Fraction

from .axial import HolomorphicSeed

_IMAGINARY = set("iIjJ")


class SeedSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message: str):
        raise SeedSyntaxError(message, self.pos)

    def expect_uint(self, what: str) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            if self.pos < len(self.text) and self.text[self.pos] in _IMAGINARY:
                self.fail("complex coefficients are not supported")
            self.fail(f"expected {what}")
        return int(self.text[start:self.pos])

    def term(self) -> tuple[Fraction, int]:
        c = self.peek()
        coeff = Fraction(1)
        if c.isdigit():
            coeff = Fraction(self.expect_uint("integer"))
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.expect_uint("denominator")
                if den == 0:
                    raise SeedSyntaxError("zero denominator", at)
                coeff /= den
            c = self.peek()
            if c == "*":
                self.pos += 1
                if self.peek() != "z":
                    self.fail("expected 'z'")
            elif c != "z":
                if c in _IMAGINARY:
                    self.fail("complex coefficients are not supported")
                return coeff, 0
        elif c != "z":
            if c in _IMAGINARY:
                self.fail("complex coefficients are not supported")
            self.fail("expected a number or 'z'" if c else "unexpected end of input")
        self.pos += 1  # the 'z'
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.expect_uint("exponent")
        return coeff, power

    def expr(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            coeff, power = self.term()
            out[power] = out.get(power, 0) + sign * coeff
            c = self.peek()
            if not c:
                return out
            if c not in "+-":
                if c in _IMAGINARY:
                    self.fail("complex coefficients are not supported")
                self.fail(f"unexpected {c!r}")
            sign = -1 if c == "-" else 1
            self.pos += 1


def parse_seed(text: str) -> HolomorphicSeed:
    if not text.strip():
        raise SeedSyntaxError("empty expression", 0)
    coeffs = _Parser(text).expr()
    degree = max(coeffs)
    return HolomorphicSeed(tuple(coeffs.get(n, 0) for n in range(degree + 1)))
