"""Exact sl2 evaluator: colored Jones of braid closures by weight-block traces.

Needed for the handful of library links (L4a1, L6a4, ...) whose colored
Jones values the HOMFLY cable route cannot reach at desk scale.  Everything
is exact over Q[u^{+-1}] with u^4 = q (the paper's variable); fractional
powers of q cancel once the framing and linking corrections are applied, and
the final conversion asserts that.

The braiding is R-check = flip o (q^{H ox H/4} o ladder), the ladder being
sum_k c_k E^k ox F^k.  The ladder is unipotent (E ox F is nilpotent), so its
inverse has ladder coefficients given by a scalar convolution recursion; no
rational-function linear algebra is needed.  Conventions are pinned against
the appendix J_1/J_2 tables (tests/test_jones.py) and checked in-module by a
Yang-Baxter assertion on first use.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct

from .qtpoly import LaurentQT


# -- tiny exact univariate Laurent helpers (dict exponent -> Fraction) -------


def _umul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            k = e1 + e2
            s = out.get(k, 0) + c1 * c2
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _uadd(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _uscale(a, e0):
    return {e + e0: c for e, c in a.items()}


def _udivide(a, b):
    """Exact division of Laurent dicts; ArithmeticError when not exact."""
    if not a:
        return {}
    rem = dict(a)
    lead = max(b)
    lc = b[lead]
    bound = min(a) - min(b) - 1
    quot = {}
    while rem:
        top = max(rem)
        e = top - lead
        if e < bound:
            raise ArithmeticError("inexact division in sl2 engine")
        c = rem[top] / lc
        quot[e] = c
        for eb, cb in b.items():
            k = eb + e
            s = rem.get(k, 0) - c * cb
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return quot


def _qint_u(n):
    """[n] in the standard sl2 normalization, as a u-dict (u^4 = q_std)."""
    if n == 0:
        return {}
    return _udivide(
        {4 * n: Fraction(1), -4 * n: Fraction(-1)},
        {4: Fraction(1), -4: Fraction(-1)},
    )


@lru_cache(maxsize=None)
def _qfact_u(k):
    out = {0: Fraction(1)}
    for j in range(1, k + 1):
        out = _umul(out, _qint_u(j))
    return out


def _qbinom_u(k, i):
    return _udivide(_qfact_u(k), _umul(_qfact_u(i), _qfact_u(k - i)))


@lru_cache(maxsize=None)
def _ladder_cnum(k):
    """Numerator of c_k = q_std^{k(k-1)/2} (q_std-q_std^{-1})^k / [k]! over [k]!."""
    out = {2 * k * (k - 1): Fraction(1)}
    for _ in range(k):
        out = _umul(out, {4: Fraction(1), -4: Fraction(-1)})
    return out


@lru_cache(maxsize=None)
def _ladder_cnum_inv(kmax):
    """Numerators over [k]! of the inverse ladder coefficients."""
    chat = [{0: Fraction(1)}]
    for k in range(1, kmax + 1):
        acc = {}
        for i in range(1, k + 1):
            acc = _uadd(acc, _umul(_qbinom_u(k, i), _umul(_ladder_cnum(i), chat[k - i])))
        chat.append({e: -c for e, c in acc.items()})
    return chat


def _gamma(N, a, b, k):
    """Matrix element of E^k ox F^k on e_a ox e_b (target e_{a-k} ox e_{b+k})."""
    val = {0: Fraction(1)}
    for j in range(k):
        val = _umul(val, _qint_u(N - a + j + 1))
        val = _umul(val, _qint_u(b + j + 1))
    return val


@lru_cache(maxsize=None)
def _entry_pos(N, a, b, k):
    entry = _udivide(_umul(_ladder_cnum(k), _gamma(N, a, b, k)), _qfact_u(k))
    return _uscale(entry, 2 * (N - 2 * (a - k)) * (N - 2 * (b + k)))


@lru_cache(maxsize=None)
def _entry_neg(N, a, b, k):
    # acts after the flip: ladder-inverse on (b, a), diag-inverse on (b, a)
    entry = _udivide(_umul(_ladder_cnum_inv(N)[k], _gamma(N, b, a, k)), _qfact_u(k))
    return _uscale(entry, -2 * (N - 2 * b) * (N - 2 * a))


def _apply_crossing(vec, i, positive, N):
    """Apply the braiding (or its inverse) at tensor slots (i, i+1)."""
    out = {}
    for state, coeff in vec.items():
        a, b = state[i], state[i + 1]
        if positive:
            # flip o diag o ladder: (a,b) -> ladder (a-k, b+k) -> flip
            for k in range(0, min(a, N - b) + 1):
                new = list(state)
                new[i], new[i + 1] = b + k, a - k
                _vadd(out, tuple(new), _umul(coeff, _entry_pos(N, a, b, k)))
        else:
            # (ladder^{-1}) o diag^{-1} o flip: flip gives (b, a)
            for k in range(0, min(b, N - a) + 1):
                new = list(state)
                new[i], new[i + 1] = b - k, a + k
                _vadd(out, tuple(new), _umul(coeff, _entry_neg(N, a, b, k)))
    return out


def _vadd(vec, state, coeff):
    cur = vec.get(state)
    if cur is None:
        vec[state] = coeff
    else:
        s = _uadd(cur, coeff)
        if s:
            vec[state] = s
        else:
            del vec[state]


@lru_cache(maxsize=None)
def _self_check(N):
    """Inverse and Yang-Baxter sanity for V_N; runs once per color."""
    for a in range(N + 1):
        for b in range(N + 1):
            v = {(a, b): {0: Fraction(1)}}
            w = _apply_crossing(_apply_crossing(v, 0, True, N), 0, False, N)
            if w != v:
                raise AssertionError(f"braiding inverse failed at N={N}")
    if N <= 2:
        for state in _iproduct(range(N + 1), repeat=3):
            v = {state: {0: Fraction(1)}}
            lhs = v
            for i in (0, 1, 0):
                lhs = _apply_crossing(lhs, i, True, N)
            rhs = v
            for i in (1, 0, 1):
                rhs = _apply_crossing(rhs, i, True, N)
            if lhs != rhs:
                raise AssertionError(f"Yang-Baxter failed at N={N}")
    return True


def _braid_trace_u(letters, strands, N):
    """Quantum trace of the braid action on V_N^{ox strands} (u-variable)."""
    total = {}
    by_weight = {}
    for st in _iproduct(range(N + 1), repeat=strands):
        by_weight.setdefault(sum(st), []).append(st)
    for block in by_weight.values():
        for start in block:
            vec = {start: {0: Fraction(1)}}
            for x in letters:
                vec = _apply_crossing(vec, abs(x) - 1, x > 0, N)
            coeff = vec.get(start)
            if not coeff:
                continue
            mu = 4 * sum(N - 2 * a for a in start)  # enhancement K^2
            total = _uadd(total, _uscale(coeff, mu))
    return total


@lru_cache(maxsize=None)
def _unknot_trace(N):
    out = {}
    for a in range(N + 1):
        e = 4 * (N - 2 * a)
        out[e] = out.get(e, 0) + Fraction(1)
    return out


@lru_cache(maxsize=None)
def _framing_factor(N):
    """Framing eigenvalue: one-kink trace over the unknot trace (a monomial)."""
    _self_check(N)
    f = _udivide(_braid_trace_u((1,), 2, N), _unknot_trace(N))
    assert len(f) == 1, "framing factor should be a monomial (Markov property)"
    return f


def _fpow(f, n):
    out = {0: Fraction(1)}
    g = f if n >= 0 else _udivide({0: Fraction(1)}, f)
    for _ in range(abs(n)):
        out = _umul(out, g)
    return out


def _u_to_q(ud):
    for e in ud:
        if e % 4:
            raise AssertionError("fractional q-exponent survived normalization")
    return LaurentQT({(e // 4, 0): c for e, c in ud.items()})


def colored_jones_braid(word, N):
    """Normalized colored Jones J_N of a braid closure, paper conventions.

    J_N(U) = 1; the framing anomaly is removed per component (self-writhe),
    and the linking contribution is normalized to q^{-2 lk N(N+1)}.
    """
    if N == 0:
        return LaurentQT.one()
    _self_check(N)
    tr = _braid_trace_u(word.letters, word.strands, N)
    f = _framing_factor(N)
    lk = word.total_linking()
    tr = _umul(tr, _fpow(f, -word.writhe + 2 * lk))
    tr = _udivide(tr, _unknot_trace(N))
    tr = _uscale(tr, -4 * lk * N * (N + 2))
    return _u_to_q(tr)
