"""Exact Reshetikhin-Turaev invariants of integer surgeries at roots of unity.

All arithmetic happens in Q[x]/Phi_{4r}(x): x is a primitive 4r-th root of
unity, the evaluation point q(s) = e^{s pi i / r} is x^{2s}, the half-integer
phase exponents live at x itself, and zero tests are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .qtpoly import LaurentQT


class PreconditionViolated(ValueError):
    pass


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Phi_m(x) as a dense tuple of integer coefficients (constant first)."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _polydiv_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact cyclotomic division")
    return out


class CyclotomicNumber:
    """Element of Q[x]/Phi_m(x), reduced representative of degree < phi(m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs=()):
        self.m = m
        phi = len(cyclotomic_polynomial(m)) - 1
        vec = [Fraction(0)] * phi
        for e, c in (coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)):
            if c:
                vec = self._add_monomial(vec, e % m, Fraction(c))
        self.coeffs = tuple(vec)

    def _add_monomial(self, vec, e, c):
        for e2, c2 in _reduce_power(self.m, e):
            vec[e2] += c * c2
        return vec

    @staticmethod
    def zero(m):
        return CyclotomicNumber(m)

    @staticmethod
    def one(m):
        return CyclotomicNumber(m, {0: 1})

    @staticmethod
    def root_power(m, e, coeff=1):
        """coeff * x^e in Q[x]/Phi_m (e arbitrary integer: x^m = 1)."""
        return CyclotomicNumber(m, {e % m: coeff})

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        self._check(other)
        return _from_vec(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return _from_vec(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return _from_vec(self.m, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _from_vec(self.m, [a * other for a in self.coeffs])
        self._check(other)
        phi = len(self.coeffs)
        raw = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[i + j] += a * b
        vec = [Fraction(0)] * phi
        for e, c in enumerate(raw):
            if c:
                for e2, c2 in _reduce_power(self.m, e):
                    vec[e2] += c * c2
        return _from_vec(self.m, vec)

    __rmul__ = __mul__

    def _check(self, other):
        if self.m != other.m:
            raise ValueError("mixed cyclotomic moduli")

    def __eq__(self, other):
        return isinstance(other, CyclotomicNumber) and self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*x^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"CyclotomicNumber(m={self.m}, {' + '.join(terms) or '0'})"

    def to_complex(self):
        """Float diagnostic only; never used in assertions."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(float(c) * z ** e for e, c in enumerate(self.coeffs))


def _from_vec(m, vec):
    out = CyclotomicNumber.__new__(CyclotomicNumber)
    out.m = m
    out.coeffs = tuple(vec)
    return out


@lru_cache(maxsize=None)
def _reduce_power(m, e):
    """x^e reduced mod Phi_m as ((exponent, coeff), ...) with exponents < phi(m)."""
    e %= m
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    if e < deg:
        return ((e, Fraction(1)),)
    # x^deg = -(phi_0 + phi_1 x + ... + phi_{deg-1} x^{deg-1}) / phi_deg
    prev = _reduce_power(m, e - 1)
    vec = {}
    for e2, c in prev:
        if e2 + 1 < deg:
            vec[e2 + 1] = vec.get(e2 + 1, Fraction(0)) + c
        else:
            lead = phi[deg]
            for j in range(deg):
                if phi[j]:
                    vec[j] = vec.get(j, Fraction(0)) - c * Fraction(phi[j], lead)
    return tuple((k, v) for k, v in vec.items() if v)


def evaluate_poly_at_root(f: LaurentQT, m: int, power: int) -> CyclotomicNumber:
    """Exact evaluation of a q-Laurent polynomial at q = x^power in Q[x]/Phi_m."""
    if not f.is_q_only():
        raise ValueError("polynomial must be univariate in q")
    coeffs = {}
    for (qe, _), c in f.terms.items():
        e = (qe * power) % m
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
    return CyclotomicNumber(m, coeffs)


# -- the RT sum ---------------------------------------------------------------


def rt_terms(jones_values, p, r, s):
    """The terms T_n (n = 0..r-2) of the surgery sum, C(r) set to 1.

    jones_values: list of J_n(K;q) as q-Laurent polynomials, n = 0..r-2.
    Works in Q[x]/Phi_{4r}: q(s) = x^{2s}; sin^2 and the phase pick up
    half-integer exponents that x accommodates.
    """
    if r < 3 or r % 2 == 0:
        raise PreconditionViolated("r must be an odd integer >= 3")
    m = 4 * r
    terms = []
    quarter = Fraction(1, 4)
    for n in range(r - 1):
        sin2 = (
            CyclotomicNumber(m, {0: 2})
            - CyclotomicNumber.root_power(m, 4 * s * (n + 1))
            - CyclotomicNumber.root_power(m, -4 * s * (n + 1))
        ) * quarter
        phase = CyclotomicNumber.root_power(m, -s * p * (n * n + 2 * n))
        jn = evaluate_poly_at_root(jones_values[n], m, 2 * s)
        terms.append(sin2 * phase * jn)
    return terms


def rt_invariant(jones_values, p, r, s):
    """tau_r(M_p; q(s)) with C(r) = 1, exactly in Q[x]/Phi_{4r}."""
    total = CyclotomicNumber.zero(4 * r)
    for t in rt_terms(jones_values, p, r, s):
        total = total + t
    return total


def verify_pairwise_cancellation(jones_values, p, r, s):
    """T_n + T_{r-2-n} = 0 for all 0 <= n <= (r-3)/2 (the vanishing mechanism).

    Requires p = 2 mod 4 and odd s.
    """
    if p % 4 != 2:
        raise PreconditionViolated("p must be congruent to 2 mod 4")
    if s % 2 == 0:
        raise PreconditionViolated("s must be odd")
    terms = rt_terms(jones_values, p, r, s)
    return all((terms[n] + terms[r - 2 - n]).is_zero() for n in range((r - 1) // 2))


def phase_antisymmetry(p, r, s, n):
    """Phase identity: x^{-sp(n^2+2n)} = -x^{-sp(m^2+2m)} for m = r-2-n."""
    m4 = 4 * r
    lhs = CyclotomicNumber.root_power(m4, -s * p * (n * n + 2 * n))
    mm = r - 2 - n
    rhs = CyclotomicNumber.root_power(m4, -s * p * (mm * mm + 2 * mm))
    return (lhs + rhs).is_zero()
