"""Exact fractions of LaurentQT values with bracket-product denominators.

Framed HOMFLY-PT values and principally-specialized Schur functions are not
Laurent polynomials: they carry denominators that are products of quantum
brackets [k] = q^k - q^{-k}.  Tracking the denominator as a multiset of
bracket indices keeps sums cheap (lcm instead of blind products) and keeps
cancellation decidable via exact division.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .qtpoly import (
    LaurentQT,
    NotDivisible,
    SubstitutionSpec,
    bracket,
    exact_divide,
    substitute,
)


@lru_cache(maxsize=None)
def _den_poly(items):
    """Expand a denominator multiset (sorted tuple of (k, mult)) to a LaurentQT."""
    out = LaurentQT.one()
    for k, m in items:
        b = bracket(k)
        for _ in range(m):
            out = out * b
    return out


class BracketFraction:
    """num / prod_k [k]^den[k], num a LaurentQT, den a Counter of bracket indices."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        if isinstance(num, int):
            num = LaurentQT.mono(num)
        self.num = num
        self.den = Counter()
        if den:
            for k, m in (den.items() if isinstance(den, (Counter, dict)) else ((k, 1) for k in den)):
                if m:
                    self.den[int(k)] += int(m)
        if num.is_zero():
            self.den = Counter()
        elif normalize:
            self._reduce()

    def _reduce(self):
        for k in sorted(self.den):
            b = bracket(k)
            while self.den[k] > 0:
                try:
                    self.num = exact_divide(self.num, b)
                except NotDivisible:
                    break
                self.den[k] -= 1
            if self.den[k] == 0:
                del self.den[k]

    @staticmethod
    def from_laurent(f):
        return BracketFraction(f, normalize=False)

    def den_poly(self):
        return _den_poly(tuple(sorted(self.den.items())))

    def is_polynomial(self):
        return not self.den

    def as_laurent(self):
        """The value as a LaurentQT; exact division if the denominator remains."""
        if not self.den:
            return self.num
        return exact_divide(self.num, self.den_poly())

    # -- arithmetic ----------------------------------------------------

    def _scaled_to(self, target):
        """Numerator rescaled to the common denominator `target` (a Counter)."""
        extra = target - self.den
        out = self.num
        for k, m in extra.items():
            b = bracket(k)
            for _ in range(m):
                out = out * b
        return out

    def __add__(self, other):
        other = _coerce(other)
        common = self.den | other.den  # max multiplicity per bracket
        return BracketFraction(self._scaled_to(common) + other._scaled_to(common), common)

    @staticmethod
    def sum(items, normalize=True):
        """Sum many fractions with a single common denominator (one rescale each)."""
        items = [_coerce(x) for x in items]
        if not items:
            return BracketFraction(LaurentQT.zero())
        common = Counter()
        for x in items:
            common |= x.den
        total = LaurentQT.zero()
        for x in items:
            total = total + x._scaled_to(common)
        return BracketFraction(total, common, normalize=normalize)

    __radd__ = __add__

    def __neg__(self):
        return BracketFraction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return (-self) + _coerce(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BracketFraction(self.num * other, self.den, normalize=False)
        if isinstance(other, LaurentQT):
            return BracketFraction(self.num * other, self.den)
        return BracketFraction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of fractions not supported")
        out = BracketFraction(LaurentQT.one())
        for _ in range(n):
            out = out * self
        return out

    def div_bracket(self, k, mult=1):
        d = Counter(self.den)
        d[k] += mult
        return BracketFraction(self.num, d)

    def __eq__(self, other):
        other = _coerce(other)
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den_poly() == other.num * self.den_poly()

    def __hash__(self):
        return hash((self.as_laurent() if not self.den else (self.num, tuple(sorted(self.den.items())))))

    def is_zero(self):
        return self.num.is_zero()

    def __repr__(self):
        from .qtpoly import to_text

        if not self.den:
            return f"BracketFraction({to_text(self.num)!r})"
        den = "*".join(f"[{k}]^{m}" if m > 1 else f"[{k}]" for k, m in sorted(self.den.items()))
        return f"BracketFraction(({to_text(self.num)}) / {den})"


def _coerce(x):
    if isinstance(x, BracketFraction):
        return x
    if isinstance(x, LaurentQT):
        return BracketFraction(x, normalize=False)
    if isinstance(x, (int, Fraction)):
        return BracketFraction(LaurentQT.mono(x), normalize=False)
    raise TypeError(f"cannot coerce {type(x)} to BracketFraction")


_BRACKET_SUB_SIGN = {
    # [k] maps to sign * [k'] under each substitution kind
    "q_inv": lambda k, n: (-1, k),
    "q_neg_inv": lambda k, n: ((-1) ** (k + 1), k),
    "t_neg": lambda k, n: (1, k),
    "t_to_qn": lambda k, n: (1, k),
    "adams_q": lambda k, n: (1, n * k),
    "adams": lambda k, n: (1, n * k),
}


def substitute_frac(frac, spec):
    """Apply a substitution endomorphism to a fraction (brackets map to brackets)."""
    num = substitute(frac.num, spec)
    den = Counter()
    sign = 1
    fn = _BRACKET_SUB_SIGN[spec.kind]
    for k, m in frac.den.items():
        s, k2 = fn(k, spec.n)
        if k2 < 0:
            s, k2 = -s, -k2
        if k2 == 0:
            raise ZeroDivisionError("substitution annihilates a denominator bracket")
        sign *= s ** m
        den[k2] += m
    return BracketFraction(sign * num, den)
