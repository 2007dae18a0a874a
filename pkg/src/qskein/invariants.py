"""Closed-form colored invariants: principal Schur specializations, the
2-strand torus family, figure-eight formulas, framing maps and the
character transforms between the irreducible (Q) and power-sum (P) bases."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .fracs import BracketFraction
from .partitions import Partition, char_value, kappa, partitions_of, z_order
from .qtpoly import LaurentQT, bracket, exact_divide, qt


class Unsupported(ValueError):
    pass


class MissingEntries(KeyError):
    pass


MAX_COLOR = 7  # largest |lambda| the closed forms are enabled for


# -- principal specialization of Schur functions ----------------------------


@lru_cache(maxsize=None)
def schur_principal(lam: Partition) -> BracketFraction:
    """Principally specialized Schur function: the unknot decorated by
    Q_lambda.  Computed by the hook-content product; the defining character
    sum is schur_principal_charsum, kept as an independent oracle."""
    num = LaurentQT.one()
    den = Counter()
    for cell in lam.cells():
        c = lam.content(cell)
        num = num * (qt(1, c, 1) - qt(1, -c, -1))
        den[lam.hook_length(cell)] += 1
    return BracketFraction(num, den)


@lru_cache(maxsize=None)
def schur_principal_charsum(lam: Partition) -> BracketFraction:
    """s_lambda = sum_mu chi_lambda(mu)/z_mu prod_i (t^{mu_i}-t^{-mu_i})/[mu_i]."""
    n = lam.size
    if n == 0:
        return BracketFraction(LaurentQT.one())
    terms = []
    for mu in partitions_of(n):
        chi = char_value(lam, mu)
        if not chi:
            continue
        num = LaurentQT.mono(Fraction(chi, z_order(mu)))
        den = Counter()
        for part in mu:
            num = num * (qt(1, 0, part) - qt(1, 0, -part))
            den[part] += 1
        terms.append(BracketFraction(num, den, normalize=False))
    return BracketFraction.sum(terms)


# -- character-sum coefficient tables ---------------------------------------


@lru_cache(maxsize=None)
def adams2_coeffs(lam: Partition):
    """Coefficients of psi_2(s_lambda) = sum_mu d_mu s_mu over mu |- 2|lambda|."""
    d = lam.size
    out = {}
    for mu in partitions_of(2 * d):
        total = Fraction(0)
        for nu in partitions_of(d):
            chi = char_value(lam, nu)
            if not chi:
                continue
            doubled = Partition(sorted((2 * p for p in nu), reverse=True))
            total += Fraction(chi * char_value(mu, doubled), z_order(nu))
        if total:
            assert total.denominator == 1
            out[mu] = int(total)
    return out


@lru_cache(maxsize=None)
def lr_coeffs(lam1: Partition, lam2: Partition):
    """Littlewood-Richardson coefficients of s_{lam1} s_{lam2} via characters."""
    out = {}
    for mu in partitions_of(lam1.size + lam2.size):
        total = Fraction(0)
        for nu1 in partitions_of(lam1.size):
            c1 = char_value(lam1, nu1)
            if not c1:
                continue
            for nu2 in partitions_of(lam2.size):
                c2 = char_value(lam2, nu2)
                if not c2:
                    continue
                merged = Partition(sorted(nu1.parts + nu2.parts, reverse=True))
                total += Fraction(
                    c1 * c2 * char_value(mu, merged), z_order(nu1) * z_order(nu2)
                )
        if total:
            assert total.denominator == 1
            out[mu] = int(total)
    return out


# -- the 2-strand torus closed forms ----------------------------------------
#
# For the standard presentation of T(2,m) as the closure of sigma_1^m:
#   m odd  (knot),  color lam:
#       H(T(2,m) * Q_lam) = sum_mu d_mu q^{m (kappa_mu/2 - kappa_lam)} s_mu
#   m even (2-component link), colors (lam1, lam2):
#       H(T(2,m) * Q_{lam1 lam2}) = sum_mu c_mu q^{(m/2)(kappa_mu - kappa_1 - kappa_2)} s_mu
# with d / c the 2-Adams and Littlewood-Richardson coefficients.  These are
# exactly the displayed W-table lines once the framing factors are stripped
# (per-component self-writhe is m for the knot and 0 for the link).


@lru_cache(maxsize=None)
def torus_H_decorated(m, colors):
    if any(c.size > MAX_COLOR for c in colors):
        raise Unsupported(f"torus closed forms enabled for |color| <= {MAX_COLOR}")
    if m % 2:
        if len(colors) != 1:
            raise Unsupported("odd torus braids close to a knot: one color required")
        (lam,) = colors
        if lam.size == 0:
            return BracketFraction(LaurentQT.one())
        kl = kappa(lam)
        return BracketFraction.sum(
            schur_principal(mu) * qt(d, m * (kappa(mu) // 2 - kl), 0)
            for mu, d in adams2_coeffs(lam).items()
        )
    if len(colors) != 2:
        raise Unsupported("even torus braids close to a 2-component link: two colors required")
    lam1, lam2 = colors
    k2 = kappa(lam1) + kappa(lam2)
    return BracketFraction.sum(
        schur_principal(mu) * qt(c, (m // 2) * (kappa(mu) - k2), 0)
        for mu, c in lr_coeffs(lam1, lam2).items()
    )


def torus_self_writhes(m):
    """Per-component self-writhe of the sigma_1^m presentation."""
    return (m,) if m % 2 else (0, 0)


def torus_W(m, colors):
    """Framing-independent W of T(2,m) (signed framing exponent, Eq-1.2 style)."""
    colors = tuple(colors)
    h = torus_H_decorated(m, colors)
    for lam, w in zip(colors, torus_self_writhes(m)):
        h = h * qt(1, -kappa(lam) * w, -lam.size * w)
    return h


# -- figure-eight closed forms ----------------------------------------------


@lru_cache(maxsize=None)
def _qfact_brace(p):
    """{p}! = prod {i} as a LaurentQT."""
    out = LaurentQT.one()
    for i in range(1, p + 1):
        out = out * exact_divide(bracket(i), bracket(1))
    return out


def _qbinom(p, k):
    """{p}!/({k}!{p-k}!), an honest Laurent polynomial."""
    return exact_divide(_qfact_brace(p), _qfact_brace(k) * _qfact_brace(p - k))


@lru_cache(maxsize=None)
def figure_eight_W(lam: Partition) -> BracketFraction:
    """W_lambda(4_1) for lambda a row, a column, or (2,1) (transcribed forms).

    The figure-eight is amphichiral with writhe-0 presentation, so this is
    both the framed and the framing-independent value.
    """
    p = lam.size
    if lam.parts == (2, 1):
        # transcribed as the unknot-normalized value; unreduce with s_(2,1)
        poly = (
            (qt(1, 0, 6) + qt(1, 0, -6))
            - (qt(1, 6, 0) + qt(1, 2, 0) - qt(1) + qt(1, -2, 0) + qt(1, -6, 0))
            * (qt(1, 0, 4) + qt(1, 0, -4))
            + (
                qt(1, 10, 0) - qt(1, 8, 0) + qt(3, 6, 0) - qt(3, 4, 0) + qt(5, 2, 0)
                - qt(4) + qt(5, -2, 0) - qt(3, -4, 0) + qt(3, -6, 0) - qt(1, -8, 0)
                + qt(1, -10, 0)
            )
            * (qt(1, 0, 2) + qt(1, 0, -2))
            - (
                qt(2, 10, 0) - qt(2, 8, 0) + qt(5, 6, 0) - qt(6, 4, 0) + qt(8, 2, 0)
                - qt(7) + qt(8, -2, 0) - qt(6, -4, 0) + qt(5, -6, 0) - qt(2, -8, 0)
                + qt(2, -10, 0)
            )
        )
        return schur_principal(lam) * poly
    if lam.length <= 1 or all(part == 1 for part in lam.parts):
        row = lam.length <= 1
        if p > MAX_COLOR:
            raise Unsupported(f"figure-eight forms enabled for |color| <= {MAX_COLOR}")
        eps = 1 if row else -1
        total = LaurentQT.one()
        for k in range(1, p + 1):
            term = _qbinom(p, k)
            for i in range(k):
                term = term * (qt(1, eps * (p + i), 1) - qt(1, -eps * (p + i), -1))
                term = term * (qt(1, eps * (i - 1), 1) - qt(1, -eps * (i - 1), -1))
            total = total + term
        tail_num = LaurentQT.one()
        tail_den = Counter()
        for i in range(1, p + 1):
            tail_num = tail_num * (qt(1, eps * (i - 1), 1) - qt(1, -eps * (i - 1), -1))
            tail_den[i] += 1
        return BracketFraction(total * tail_num, tail_den)
    raise Unsupported(f"no transcribed figure-eight form for color {lam}")


# -- framing -----------------------------------------------------------------


def frame_factor(lam: Partition, tau: int) -> LaurentQT:
    """f^tau(Q_lambda) = q^{kappa_lambda tau} t^{|lambda| tau} Q_lambda."""
    return qt(1, kappa(lam) * tau, lam.size * tau)


def framing_change_Z(d, base, tau):
    """Z_{(d)}(K; tau) = t^{d tau} sum_{mu |- d} Z_mu(K)/z_mu [d tau mu]/[d tau].

    base maps each Partition mu of d to Z_mu(K).  tau = 0 returns Z_{(d)}(K).
    """
    row = Partition((d,))
    if tau == 0:
        return base[row]
    terms = []
    for mu in partitions_of(d):
        if mu not in base:
            raise MissingEntries(f"Z_mu missing for mu = {mu}")
        num = LaurentQT.mono(Fraction(1, z_order(mu)))
        for part in mu:
            num = num * bracket(d * tau * part)
        term = base[mu] * num
        sign = 1
        dt = d * tau
        if dt < 0:
            sign, dt = -1, -dt
        terms.append(term.div_bracket(dt) * sign)
    return BracketFraction.sum(terms) * qt(1, 0, d * tau)


# -- invariant tables and basis transforms ------------------------------------


class InvariantTable:
    """Colored values of one link: entries map color tuples to exact values.

    basis 'Q': entries are H(L * f^framing Q_{\\vec lambda}) (decorated framed
    values); basis 'P': entries are Z_{\\vec mu}.  The two are related by the
    character transform, which this class applies on demand.
    """

    def __init__(self, link, basis, entries, framing=None):
        self.link = link
        self.basis = basis
        self.entries = dict(entries)
        ncomp = len(next(iter(entries))) if entries else 0
        self.framing = tuple(framing) if framing is not None else (0,) * ncomp

    def frame(self, tau_vec):
        """Apply the framing map f^tau componentwise (Q basis only)."""
        if self.basis != "Q":
            raise Unsupported("framing map acts on the Q basis")
        out = {}
        for lams, val in self.entries.items():
            factor = LaurentQT.one()
            for lam, tau in zip(lams, tau_vec):
                factor = factor * frame_factor(lam, tau)
            out[lams] = val * factor
        framing = tuple(a + b for a, b in zip(self.framing, tau_vec))
        return InvariantTable(self.link, "Q", out, framing)

    def z_value(self, mus):
        """Z_{\\vec mu} = sum over lambda vectors of prod chi * Q-entry."""
        if self.basis == "P":
            return self.entries[tuple(mus)]
        mus = tuple(mus)
        sizes = tuple(m.size for m in mus)
        terms = []
        for lams in product(*(partitions_of(n) for n in sizes)):
            coeff = 1
            for lam, mu in zip(lams, mus):
                coeff *= char_value(lam, mu)
                if not coeff:
                    break
            if not coeff:
                continue
            if lams not in self.entries:
                raise MissingEntries(f"Q-basis entry missing for {lams}")
            terms.append(self.entries[lams] * coeff)
        return BracketFraction.sum(terms)

    def zcheck_value(self, mus):
        """Z-check = [\\vec mu] Z_{\\vec mu}."""
        mus = tuple(mus)
        val = self.z_value(mus)
        for mu in mus:
            for part in mu:
                val = val * bracket(part)
        return val

    def q_value(self, lams):
        """H(L * Q_{\\vec lambda}) = sum_{\\vec mu} prod chi/z * Z_{\\vec mu}."""
        if self.basis == "Q":
            return self.entries[tuple(lams)]
        lams = tuple(lams)
        sizes = tuple(l.size for l in lams)
        terms = []
        for mus in product(*(partitions_of(n) for n in sizes)):
            coeff = Fraction(1)
            for lam, mu in zip(lams, mus):
                coeff *= Fraction(char_value(lam, mu), z_order(mu))
                if not coeff:
                    break
            if not coeff:
                continue
            if mus not in self.entries:
                raise MissingEntries(f"P-basis entry missing for {mus}")
            terms.append(self.entries[mus] * coeff)
        return BracketFraction.sum(terms)


# -- closed-form decorated values for the library ------------------------------


def unknot_table(max_size, kinks=0):
    """Q-basis table of the unknot with `kinks` extra positive kinks."""
    entries = {}
    for n in range(max_size + 1):
        for lam in partitions_of(n):
            entries[(lam,)] = schur_principal(lam) * frame_factor(lam, kinks)
    return InvariantTable(f"U^{kinks}", "Q", entries, (kinks,))


def torus_table(m, max_size, kinks=None):
    """Q-basis table of T(2,m) in its sigma_1^m presentation (framed values),
    with optional extra kinks per component."""
    ncomp = 1 if m % 2 else 2
    kinks = tuple(kinks) if kinks is not None else (0,) * ncomp
    entries = {}
    if ncomp == 1:
        for n in range(1, max_size + 1):
            for lam in partitions_of(n):
                entries[(lam,)] = torus_H_decorated(m, (lam,)) * frame_factor(lam, kinks[0])
        return InvariantTable(f"T(2,{m})^{kinks}", "Q", entries, (m + kinks[0],))
    for n1 in range(1, max_size + 1):
        for n2 in range(1, max_size + 1):
            for lam1 in partitions_of(n1):
                for lam2 in partitions_of(n2):
                    entries[(lam1, lam2)] = (
                        torus_H_decorated(m, (lam1, lam2))
                        * frame_factor(lam1, kinks[0])
                        * frame_factor(lam2, kinks[1])
                    )
    return InvariantTable(f"T(2,{m})^{kinks}", "Q", entries, kinks)


def figure_eight_table(max_size):
    """Q-basis table of 4_1 for the color sizes with complete transcriptions."""
    entries = {}
    for n in range(1, max_size + 1):
        for lam in partitions_of(n):
            try:
                entries[(lam,)] = figure_eight_W(lam)
            except Unsupported:
                pass
    return InvariantTable("4_1", "Q", entries, (0,))
