from fractions import Fraction
from itertools import product

import pytest

from qskein.partitions import (
    Partition,
    SizeMismatch,
    char_value,
    kappa,
    parse_colors,
    parse_partition,
    partitions_of,
    phi,
    z_order,
)
from qskein.qtpoly import LaurentQT, bracket, exact_divide, qt


# -- independent character oracle for small n: expand p_mu and s_lambda in
#    monomials of n variables and check the Frobenius relation directly.


def _monomials_product(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            k = tuple(x + y for x, y in zip(ea, eb))
            out[k] = out.get(k, 0) + ca * cb
            if out[k] == 0:
                del out[k]
    return out


def _power_sum(r, nvars):
    out = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = r
        out[tuple(e)] = 1
    return out


def _p_mu(mu, nvars):
    out = {tuple([0] * nvars): 1}
    for r in mu:
        out = _monomials_product(out, _power_sum(r, nvars))
    return out


def _ssyt(shape, nvars):
    """Enumerate semistandard tableaux; return monomial expansion of s_shape."""
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    out = {}

    def rec(idx, filling):
        if idx == len(cells):
            e = [0] * nvars
            for v in filling.values():
                e[v] += 1
            k = tuple(e)
            out[k] = out.get(k, 0) + 1
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, nvars):
            filling[(i, j)] = v
            rec(idx + 1, filling)
        filling.pop((i, j), None)

    rec(0, {})
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_frobenius_oracle(n):
    # p_mu = sum_lambda chi_lambda(mu) s_lambda, expanded over n variables
    lams = partitions_of(n)
    schurs = {lam.parts: _ssyt(lam.parts, n) for lam in lams}
    for mu in lams:
        lhs = _p_mu(mu.parts, n)
        rhs = {}
        for lam in lams:
            c = char_value(lam, mu)
            if not c:
                continue
            for k, v in schurs[lam.parts].items():
                rhs[k] = rhs.get(k, 0) + c * v
                if rhs[k] == 0:
                    del rhs[k]
        assert lhs == rhs, (mu, lhs, rhs)


class TestPartitionBasics:
    def test_parse_and_str(self):
        assert parse_partition("(3,1,1)").parts == (3, 1, 1)
        assert parse_partition("()").parts == ()
        assert str(Partition((3, 1, 1))) == "(3,1,1)"

    def test_colors(self):
        cs = parse_colors("[(2),(1,1)]")
        assert cs[0].parts == (2,) and cs[1].parts == (1, 1)

    def test_invalid(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((0,))

    def test_conjugate_involution(self):
        for n in range(9):
            for lam in partitions_of(n):
                assert lam.conjugate().conjugate() == lam

    def test_reverse_lex_order(self):
        assert [p.parts for p in partitions_of(4)] == [
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)
        ]


class TestStatistics:
    def test_kappa_examples(self):
        assert kappa(Partition()) == 0
        assert kappa(Partition((2,))) == 2
        assert kappa(Partition((1, 1))) == -2

    def test_kappa_parity_and_conjugate(self):
        for n in range(13):
            for lam in partitions_of(n):
                k = kappa(lam)
                assert k % 2 == 0
                assert kappa(lam.conjugate()) == -k

    def test_z_order_examples(self):
        assert z_order(Partition((1, 1))) == 2
        assert z_order(Partition((2,))) == 2
        assert z_order(Partition()) == 1
        assert z_order(Partition((3, 1, 1))) == 6

    def test_z_order_sum(self):
        # sum over classes of n!/z_mu = number of permutations
        import math
        for n in range(1, 9):
            fact = math.factorial(n)
            assert sum(fact // z_order(mu) for mu in partitions_of(n)) == fact


class TestCharacters:
    def test_basic_values(self):
        assert char_value(Partition((2,)), Partition((1, 1))) == 1
        assert char_value(Partition((1, 1)), Partition((2,))) == -1
        assert char_value(Partition((1, 1)), Partition((3,))) == 0
        assert char_value(Partition(), Partition()) == 1

    def test_hook_rule_on_full_cycle(self):
        # chi_{(a|b)}((d)) = (-1)^b for hooks, 0 otherwise
        for d in range(1, 11):
            for lam in partitions_of(d):
                v = char_value(lam, Partition((d,)))
                if lam.is_hook():
                    b = lam.length - 1
                    assert v == (-1) ** b
                else:
                    assert v == 0

    def test_orthogonality(self):
        for n in range(1, 9):
            parts = partitions_of(n)
            for mu in parts:
                for nu in parts:
                    s = sum(
                        Fraction(char_value(lam, mu) * char_value(lam, nu), z_order(mu))
                        for lam in parts
                    )
                    assert s == (1 if mu == nu else 0)

    def test_conjugate_sign_rule(self):
        for n in range(1, 9):
            parts = partitions_of(n)
            for lam in parts:
                for mu in parts:
                    assert char_value(lam.conjugate(), mu) == (-1) ** (
                        n - mu.length
                    ) * char_value(lam, mu)

    def test_dimension_column(self):
        # chi_lambda((1^n)) = number of standard Young tableaux; spot checks
        assert char_value(Partition((2, 1)), Partition((1, 1, 1))) == 2
        assert char_value(Partition((2, 2)), Partition((1,) * 4)) == 2
        assert char_value(Partition((3, 2)), Partition((1,) * 5)) == 5


class TestPhi:
    def test_examples(self):
        assert phi(Partition((2,)), Partition((1, 1))) == qt(1, 2, 0) - qt(1, -2, 0)
        assert phi(Partition((1,)), Partition((1,))) == LaurentQT.one()
        f = phi(Partition((3,)), Partition((3,)))
        assert f == qt(1, 6, 0) + LaurentQT.one() + qt(1, -6, 0)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            phi(Partition((2,)), Partition((3,)))

    def test_row_identity(self):
        # phi_{(d),mu} = prod_j [d mu_j] / [d]  (framing-change lemma), d <= 6
        for d in range(1, 7):
            for mu in partitions_of(d):
                prod = LaurentQT.one()
                for part in mu:
                    prod = prod * bracket(d * part)
                expected = exact_divide(prod, bracket(d))
                assert phi(Partition((d,)), mu) == expected, (d, mu)
