"""Exact sparse Laurent polynomials in q, t over the rationals.

This is the value type everything else computes with: quantum brackets,
substitution endomorphisms, the z = q - q^{-1} expansion used for the
Z[z^2, t^{+-1}] membership test, exact division, congruence testing and
root-of-unity vanishing tests.  No floating point anywhere.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache


class NotInSubring(ValueError):
    """The value has no expansion as a polynomial in z (per t-slice)."""


class NotInScaledRing(ValueError):
    """Some q-exponent is not divisible by the requested scale d."""


class NotDivisible(ValueError):
    """Exact Laurent division has a nonzero remainder."""


class LaurentQT:
    """Canonical sparse Laurent polynomial in q and t with Fraction coefficients.

    Immutable; zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (qe, te), c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c != 0:
                    clean[(int(qe), int(te))] = c
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def mono(coeff, qe=0, te=0):
        return LaurentQT({(qe, te): Fraction(coeff)})

    # -- basic structure ----------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQT.mono(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def coeff(self, qe, te=0):
        return self.terms.get((qe, te), Fraction(0))

    def q_degrees(self):
        return [qe for qe, _ in self.terms]

    def t_degrees(self):
        return [te for _, te in self.terms]

    def is_q_only(self):
        return all(te == 0 for _, te in self.terms)

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.terms.values())

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentQT.mono(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        r = LaurentQT.__new__(LaurentQT)
        r.terms = out
        r._hash = None
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentQT.__new__(LaurentQT)
        r.terms = {k: -c for k, c in self.terms.items()}
        r._hash = None
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentQT.mono(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _ZERO
            r = LaurentQT.__new__(LaurentQT)
            r.terms = {k: c * other for k, c in self.terms.items()}
            r._hash = None
            return r
        if not isinstance(other, LaurentQT):
            return NotImplemented
        out = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                k = (qa + qb, ta + tb)
                s = out.get(k, Fraction(0)) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        r = LaurentQT.__new__(LaurentQT)
        r.terms = out
        r._hash = None
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) == 1:
                ((qe, te), c), = self.terms.items()
                return LaurentQT({(qe * n, te * n): c ** n})
            raise ValueError("negative power of a non-monomial")
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- display -------------------------------------------------------

    def sorted_terms(self):
        """Terms sorted lexicographically by (t_exponent, q_exponent)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __repr__(self):
        return f"LaurentQT({to_text(self)!r})"


_ZERO = LaurentQT()
_ONE = LaurentQT({(0, 0): Fraction(1)})


def qt(coeff, qe=0, te=0):
    return LaurentQT.mono(coeff, qe, te)


def bracket(d):
    """[d] = q^d - q^{-d}."""
    if d == 0:
        return _ZERO
    return LaurentQT({(d, 0): Fraction(1), (-d, 0): Fraction(-1)})


def brace(d):
    """{d} = [d]/[1], defined for every integer d."""
    if d == 0:
        return _ZERO
    sign = 1 if d > 0 else -1
    a = abs(d)
    return sign * LaurentQT({(a - 1 - 2 * i, 0): Fraction(1) for i in range(a)})


def delta(d):
    """Delta_d = (q^d + q^{-d})/2."""
    if d == 0:
        return _ONE
    return LaurentQT({(d, 0): Fraction(1, 2), (-d, 0): Fraction(1, 2)})


Z = bracket(1)


# -- substitutions ------------------------------------------------------


class SubstitutionSpec:
    """One of the ring endomorphisms used by the symmetry and Adams checks.

    kind: 'q_inv' (q -> q^{-1}), 'q_neg_inv' (q -> -q^{-1}), 't_neg' (t -> -t),
    't_to_qn' (t -> q^n), 'adams_q' (q -> q^d), 'adams' ((q,t) -> (q^d,t^d)).
    """

    KINDS = ("q_inv", "q_neg_inv", "t_neg", "t_to_qn", "adams_q", "adams")

    def __init__(self, kind, n=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown substitution kind {kind!r}")
        if kind in ("t_to_qn", "adams_q", "adams") and n is None:
            raise ValueError(f"substitution {kind!r} needs an integer parameter")
        self.kind = kind
        self.n = n


def substitute(f, spec):
    """Exact image of f under the substitution endomorphism."""
    k, n = spec.kind, spec.n
    out = {}
    for (qe, te), c in f.terms.items():
        if k == "q_inv":
            key, cc = (-qe, te), c
        elif k == "q_neg_inv":
            key, cc = (-qe, te), c * (-1) ** (qe & 1)
        elif k == "t_neg":
            key, cc = (qe, te), c * (-1) ** (te & 1)
        elif k == "t_to_qn":
            key, cc = (qe + n * te, 0), c
        elif k == "adams_q":
            key, cc = (n * qe, te), c
        else:  # adams
            key, cc = (n * qe, n * te), c
        s = out.get(key, Fraction(0)) + cc
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return LaurentQT(out)


def adams(f, d):
    """Psi_d(f)(q, t) = f(q^d, t^d)."""
    return substitute(f, SubstitutionSpec("adams", d))


# -- z-expansion ---------------------------------------------------------


class ZTExpansion:
    """f rewritten as a polynomial in z = q - q^{-1} with t-Laurent coefficients.

    coeffs maps (z_exponent >= 0, t_exponent) -> Fraction; parity_flag is True
    iff every z-exponent is even.
    """

    def __init__(self, coeffs):
        self.coeffs = {k: v for k, v in coeffs.items() if v != 0}
        self.parity_flag = all(ze % 2 == 0 for ze, _ in self.coeffs)

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def max_z_power(self):
        return max((ze for ze, _ in self.coeffs), default=0)

    def to_laurent(self):
        """Re-substitute z = q - q^{-1}; must reproduce the source exactly."""
        out = _ZERO
        zpows = {0: _ONE}
        for ze in range(1, self.max_z_power() + 1):
            zpows[ze] = zpows[ze - 1] * Z
        for (ze, te), c in sorted(self.coeffs.items()):
            out = out + zpows[ze] * LaurentQT.mono(c, 0, te)
        return out

    def __eq__(self, other):
        return isinstance(other, ZTExpansion) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"ZTExpansion({to_text_z(self)!r})"


@lru_cache(maxsize=None)
def _z_power_qdict(n):
    """(q - q^{-1})^n as a tuple of (q_exponent, coefficient)."""
    out = {0: Fraction(1)}
    for _ in range(n):
        nxt = {}
        for e, c in out.items():
            nxt[e + 1] = nxt.get(e + 1, Fraction(0)) + c
            nxt[e - 1] = nxt.get(e - 1, Fraction(0)) - c
        out = nxt
    return tuple(sorted(out.items()))


def expand_in_z(f):
    """Expand each t-slice of f in powers of z = q - q^{-1}.

    Greedy top-degree subtraction; raises NotInSubring when a slice is not a
    polynomial in z.  Round-trips exactly: expand_in_z(f).to_laurent() == f.
    """
    slices = {}
    for (qe, te), c in f.terms.items():
        slices.setdefault(te, {})[qe] = c
    coeffs = {}
    for te, sl in slices.items():
        work = dict(sl)
        while work:
            top = max(work)
            if top < 0:
                raise NotInSubring(f"t^{te} slice has no z-polynomial expansion")
            c = work[top]
            coeffs[(top, te)] = c
            for e, zc in _z_power_qdict(top):
                s = work.get(e, Fraction(0)) - c * zc
                if s:
                    work[e] = s
                else:
                    work.pop(e, None)
    return ZTExpansion(coeffs)


def expand_in_bracket(f, d):
    """Expand f in powers of [d], after rescaling q^d -> w.

    Every q-exponent must be divisible by d; raises NotInScaledRing otherwise.
    The returned expansion's z-exponent is the [d]-exponent.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    scaled = {}
    for (qe, te), c in f.terms.items():
        if qe % d:
            raise NotInScaledRing(f"q-exponent {qe} not divisible by {d}")
        scaled[(qe // d, te)] = c
    return expand_in_z(LaurentQT(scaled))


def in_z2t_ring(f):
    """Membership test for Z[z^2, t^{+-1}] (the integrality theorem's target)."""
    try:
        ex = expand_in_z(f)
    except NotInSubring:
        return False
    return ex.parity_flag and ex.has_integer_coeffs()


# -- exact division ------------------------------------------------------


def exact_divide(A, B):
    """Return Q with Q*B == A exactly, else raise NotDivisible.

    Works in the Laurent ring: shifts both operands to honest polynomials and
    runs single-divisor multivariate division under lex order on (q, t), with
    a lazy max-heap tracking the running leading term.
    """
    import heapq

    if B.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if A.is_zero():
        return _ZERO
    # shift so both are polynomials with nonnegative exponents
    aq = min(qe for qe, _ in A.terms)
    at = min(te for _, te in A.terms)
    bq = min(qe for qe, _ in B.terms)
    bt = min(te for _, te in B.terms)
    rem = {(qe - aq, te - at): c for (qe, te), c in A.terms.items()}
    div = {(qe - bq, te - bt): c for (qe, te), c in B.terms.items()}
    lead = max(div)  # lex on (q_exponent, t_exponent)
    lc = div[lead]
    div_rest = [(k, c) for k, c in div.items() if k != lead]
    heap = [(-qe, -te) for qe, te in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        while heap:
            nq, nt = heap[0]
            top = (-nq, -nt)
            if top in rem:
                break
            heapq.heappop(heap)
        dq, dt = top[0] - lead[0], top[1] - lead[1]
        if dq < 0 or dt < 0:
            raise NotDivisible("nonzero remainder")
        c = rem.pop(top) / lc
        quot[(dq, dt)] = c
        for (qe, te), bc in div_rest:
            k = (qe + dq, te + dt)
            s = rem.get(k, Fraction(0)) - c * bc
            if s:
                if k not in rem:
                    heapq.heappush(heap, (-k[0], -k[1]))
                rem[k] = s
            else:
                rem.pop(k, None)
    shift_q, shift_t = aq - bq, at - bt
    return LaurentQT({(qe + shift_q, te + shift_t): c for (qe, te), c in quot.items()})


def divides(B, A):
    try:
        exact_divide(A, B)
        return True
    except NotDivisible:
        return False


# -- congruences ---------------------------------------------------------


class CongruenceResult:
    """Outcome of a congruence test; truthy iff the congruence holds.

    Carries the witness quotient so that witness * modulus == difference can
    be re-verified independently, and a machine-readable failure reason.
    """

    def __init__(self, ok, quotient=None, expansion=None, reason=None):
        self.ok = ok
        self.quotient = quotient
        self.expansion = expansion
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"CongruenceResult(ok={self.ok}, reason={self.reason!r})"


def congruent(A, B, C, mode="strict_integer"):
    """A == B mod C: (A-B)/C must lie in Z[z^2, t^{+-1}] (strict_integer mode)
    or Q[z^2, t^{+-1}] (rational mode)."""
    if mode not in ("strict_integer", "rational"):
        raise ValueError(f"unknown congruence mode {mode!r}")
    diff = A - B
    if diff.is_zero():
        return CongruenceResult(True, _ZERO, ZTExpansion({}))
    try:
        q = exact_divide(diff, C)
    except NotDivisible:
        return CongruenceResult(False, reason="not_divisible")
    try:
        ex = expand_in_z(q)
    except NotInSubring:
        return CongruenceResult(False, quotient=q, reason="quotient_not_z_polynomial")
    if not ex.parity_flag:
        return CongruenceResult(False, quotient=q, expansion=ex, reason="odd_z_power")
    if mode == "strict_integer" and not ex.has_integer_coeffs():
        return CongruenceResult(False, quotient=q, expansion=ex, reason="non_integer_coefficient")
    return CongruenceResult(True, quotient=q, expansion=ex)


def divisible_with_integer_quotient(A, C):
    """A == 0 mod C in Z[q^{+-1}, t^{+-1}] (no z^2-parity demand).

    This is the congruence notion of the colored Jones theorems, where the
    modulus lives in Z[q^{+-1}].
    """
    if A.is_zero():
        return CongruenceResult(True, _ZERO)
    try:
        q = exact_divide(A, C)
    except NotDivisible:
        return CongruenceResult(False, reason="not_divisible")
    if not q.has_integer_coeffs():
        return CongruenceResult(False, quotient=q, reason="non_integer_coefficient")
    return CongruenceResult(True, quotient=q)


# -- root-of-unity vanishing ---------------------------------------------


def _clear_to_qpoly(f):
    """q^M * f as a dict exponent -> Fraction with min exponent 0."""
    if not f.is_q_only():
        raise ValueError("value is not univariate in q")
    m = min(qe for qe, _ in f.terms)
    return {qe - m: c for (qe, _), c in f.terms.items()}


def _qpoly_divisible(num, den):
    """Exact division test for dense univariate polynomials (dict form)."""
    rem = dict(num)
    dl = max(den)
    dc = den[dl]
    while rem:
        top = max(rem)
        if top < dl:
            return False
        c = rem[top] / dc
        for e, b in den.items():
            k = e + top - dl
            s = rem.get(k, Fraction(0)) - c * b
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return True


def vanishes_on_roots(f, root_set, n):
    """True iff f(q) = 0 for every q in A_n / B_n / C_n (exact, no floats).

    B_n = {q^n = 1}  <=>  (q^n - 1) divides q^M f;
    C_n = {q^n = -1} <=>  (q^n + 1) divides;  A_n = B_n u C_n <=> (q^{2n} - 1).
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if f.is_zero():
        return True
    num = _clear_to_qpoly(f)
    if root_set == "B":
        den = {n: Fraction(1), 0: Fraction(-1)}
    elif root_set == "C":
        den = {n: Fraction(1), 0: Fraction(1)}
    elif root_set == "A":
        den = {2 * n: Fraction(1), 0: Fraction(-1)}
    else:
        raise ValueError(f"unknown root set {root_set!r}")
    return _qpoly_divisible(num, den)


# -- serialization -------------------------------------------------------


def to_json_terms(f):
    """JSON form: array of {q, t, num, den} records sorted by (t, q)."""
    return [
        {"q": qe, "t": te, "num": str(c.numerator), "den": str(c.denominator)}
        for (qe, te), c in f.sorted_terms()
    ]


def from_json_terms(records):
    return LaurentQT(
        {(r["q"], r["t"]): Fraction(int(r["num"]), int(r["den"])) for r in records}
    )


def dumps(f):
    return json.dumps(to_json_terms(f))


def loads(s):
    return from_json_terms(json.loads(s))


def _fmt_coeff(c, lead):
    sign = "-" if c < 0 else ("" if lead else "+")
    a = abs(c)
    body = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
    return sign, body


def _fmt_monomial(body, vars_):
    parts = [] if body == "1" and vars_ else ([body] if not vars_ else [])
    if body != "1" and vars_:
        parts = [body]
    for sym, e in vars_:
        if e == 0:
            continue
        parts.append(sym if e == 1 else f"{sym}^{e}")
    return "*".join(parts) if parts else body


def to_text(f):
    """Human-readable Laurent string with q^k*t^l monomials."""
    if f.is_zero():
        return "0"
    out = []
    for i, ((qe, te), c) in enumerate(f.sorted_terms()):
        sign, body = _fmt_coeff(c, i == 0)
        mono = _fmt_monomial(body, [("q", qe), ("t", te)])
        out.append(f"{sign}{mono}" if i == 0 else f" {sign} {mono}")
    return "".join(out)


def to_text_z(ex):
    """Human-readable string for a z-expansion (t^l*z^k monomials)."""
    if not ex.coeffs:
        return "0"
    items = sorted(ex.coeffs.items(), key=lambda kv: (kv[0][0], kv[0][1]))
    out = []
    for i, ((ze, te), c) in enumerate(items):
        sign, body = _fmt_coeff(c, i == 0)
        mono = _fmt_monomial(body, [("t", te), ("z", ze)])
        out.append(f"{sign}{mono}" if i == 0 else f" {sign} {mono}")
    return "".join(out)
