"""Tiny exact expression parser for polynomial text in q, t, z.

Grammar (whitespace-insensitive):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'/')? factor)*        # adjacency multiplies
    factor := atom ['^' ['-'] INT]
    atom   := INT | 'q' | 't' | 'z' | '(' expr ')'

Values are unreduced exact fractions (num, den) of LaurentQT, so displays
like `(t^3-t)/z - t*z` parse losslessly; equality against computed values is
by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction

from .qtpoly import LaurentQT, exact_divide


class RawFraction:
    """Unreduced num/den pair; just enough arithmetic to evaluate parse trees."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = den if den is not None else LaurentQT.one()

    def __add__(self, o):
        if self.den == o.den:
            return RawFraction(self.num + o.num, self.den)
        return RawFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return RawFraction(-self.num, self.den)

    def __mul__(self, o):
        return RawFraction(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero in expression")
        return RawFraction(self.num * o.den, self.den * o.num)

    def __pow__(self, n):
        if n >= 0:
            return RawFraction(self.num ** n, self.den ** n)
        return RawFraction(self.den ** (-n), self.num ** (-n))

    def as_laurent(self):
        return exact_divide(self.num, self.den)

    def equals_laurent(self, f):
        return self.num == f * self.den

    def equals_frac(self, bf):
        """Exact comparison against a BracketFraction (cross-multiplied)."""
        return self.num * bf.den_poly() == bf.num * self.den


_Z = LaurentQT({(1, 0): Fraction(1), (-1, 0): Fraction(-1)})


class _Parser:
    def __init__(self, text):
        self.s = text
        self.i = 0

    def _skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self._skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self):
        c = self.peek()
        self.i += 1
        return c

    def error(self, msg):
        raise SyntaxError(f"{msg} at position {self.i} in {self.s[:self.i + 20]!r}...")

    def parse(self):
        v = self.expr()
        if self.peek():
            self.error("trailing input")
        return v

    def expr(self):
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        elif self.peek() == "+":
            self.take()
        v = self.term()
        if neg:
            v = -v
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            v = v + t if op == "+" else v - t
        return v

    def term(self):
        v = self.factor()
        while True:
            c = self.peek()
            if c == "*":
                self.take()
                v = v * self.factor()
            elif c == "/":
                self.take()
                v = v / self.factor()
            elif c and (c.isdigit() or c in "qtz("):
                v = v * self.factor()
            else:
                return v

    def factor(self):
        v = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            elif self.peek() == "+":
                self.take()
            n = self.integer()
            v = v ** (sign * n)
        return v

    def integer(self):
        self._skip()
        start = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected integer")
        return int(self.s[start:self.i])

    def atom(self):
        c = self.peek()
        if c == "(":
            self.take()
            v = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return v
        if c == "q":
            self.take()
            return RawFraction(LaurentQT.mono(1, 1, 0))
        if c == "t":
            self.take()
            return RawFraction(LaurentQT.mono(1, 0, 1))
        if c == "z":
            self.take()
            return RawFraction(_Z)
        if c.isdigit():
            return RawFraction(LaurentQT.mono(self.integer()))
        if c == "-":
            self.take()
            return -self.factor()
        self.error(f"unexpected character {c!r}")


def parse_expr(text):
    """Parse polynomial text into a RawFraction."""
    return _Parser(text).parse()


def parse_laurent(text):
    """Parse text that must denote an honest Laurent polynomial."""
    return parse_expr(text).as_laurent()
