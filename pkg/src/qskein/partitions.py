"""Partitions, their statistics, symmetric-group characters and the
character-sum function phi used by the framing-change formula."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .qtpoly import LaurentQT


class SizeMismatch(ValueError):
    pass


class Partition:
    """Weakly decreasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(cols)

    def multiplicity(self, i):
        return sum(1 for p in self.parts if p == i)

    def is_hook(self):
        return self.length >= 1 and all(p == 1 for p in self.parts[1:])

    def cells(self):
        """(row, col) cells, 0-based."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def content(self, cell):
        i, j = cell
        return j - i

    def hook_length(self, cell):
        i, j = cell
        arm = self.parts[i] - j - 1
        conj = self.conjugate().parts
        leg = conj[j] - i - 1
        return arm + leg + 1

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def parse_partition(text):
    """Parse the CLI partition syntax: '(3,1,1)' or '()' for the empty one."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad partition syntax: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return Partition()
    return Partition(int(p) for p in inner.split(","))


def parse_colors(text):
    """Parse a color tuple: '[(2),(1,1)]' -> tuple of Partition."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad color tuple syntax: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return ()
    out, depth, start = [], 0, 0
    for i, c in enumerate(inner):
        if c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
        elif c == "," and depth == 0:
            out.append(inner[start:i])
            start = i + 1
    out.append(inner[start:])
    return tuple(parse_partition(p) for p in out)


def format_colors(colors):
    return "[" + ",".join(str(c) for c in colors) + "]"


@lru_cache(maxsize=None)
def _partitions_of(n, maxpart):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n):
    """All partitions of n in reverse-lexicographic order ((n) first)."""
    return [Partition(p) for p in _partitions_of(n, n)]


def kappa(lam):
    """kappa = sum_j lam_j (lam_j - 2j + 1); even, and kappa(lam^t) = -kappa(lam)."""
    return sum(p * (p - 2 * (j + 1) + 1) for j, p in enumerate(lam.parts))


def z_order(mu):
    """z_mu = prod_j j^{m_j} m_j!, the centralizer order of the class."""
    out = 1
    for i in set(mu.parts):
        m = mu.multiplicity(i)
        fact = 1
        for x in range(2, m + 1):
            fact *= x
        out *= i ** m * fact
    return out


def aut_order(lam):
    out = 1
    for i in set(lam.parts):
        m = lam.multiplicity(i)
        for x in range(2, m + 1):
            out *= x
    return out


# -- Murnaghan-Nakayama characters ----------------------------------------


def _betas(parts):
    L = len(parts)
    return frozenset(parts[i] + (L - 1 - i) for i in range(L))


def _parts_from_betas(betas):
    bs = sorted(betas, reverse=True)
    L = len(bs)
    parts = tuple(b - (L - 1 - i) for i, b in enumerate(bs))
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _char_rec(parts, mu):
    if not mu:
        return 1 if not parts else 0
    m = mu[0]
    rest = mu[1:]
    betas = _betas(parts)
    total = 0
    for b in betas:
        nb = b - m
        if nb < 0 or nb in betas:
            continue
        height = sum(1 for x in betas if nb < x < b)
        sub = _parts_from_betas((betas - {b}) | {nb})
        total += (-1) ** height * _char_rec(sub, rest)
    return total


def char_value(lam, mu):
    """chi_lambda(mu), symmetric-group character; 0 when |lambda| != |mu|."""
    if lam.size != mu.size:
        return 0
    return _char_rec(lam.parts, tuple(sorted(mu.parts, reverse=True)))


def phi(mu, nu):
    """phi_{mu,nu}(x) = sum_{lambda |- n} chi_lambda(mu) chi_lambda(nu) x^kappa.

    Returned as a LaurentQT in q (q plays the formal variable x).
    """
    if mu.size != nu.size:
        raise SizeMismatch(f"|mu|={mu.size} != |nu|={nu.size}")
    out = {}
    for lam in partitions_of(mu.size):
        c = char_value(lam, mu) * char_value(lam, nu)
        if c:
            k = kappa(lam)
            out[(k, 0)] = out.get((k, 0), 0) + c
    return LaurentQT({k: Fraction(v) for k, v in out.items()})
