import random

import pytest

from icefock.coeff_ring import Ring
from icefock.fock import (
    FockVector,
    J_apply,
    J_bra_apply,
    J_neg_apply,
    inner_product,
    pair_rule,
    rho_star,
    straighten,
    straighten_naive,
    wedge_onto,
)
from icefock.golden import wedge_example, wedge_expected, wedge_printed
from icefock.partitions import partitions_of


def test_pair_rule_congruent():
    R = Ring(3)
    assert pair_rule(1, 4, 3) == [(-R.one, 4, 1)]
    assert pair_rule(-2, 1, 3) == [(-R.one, 1, -2)]


def test_pair_rule_adjacent():
    R = Ring(2)
    assert pair_rule(0, 1, 2) == [(R.g(-1), 1, 0)]


def test_pair_rule_with_corrections():
    R = Ring(2)
    assert pair_rule(1, 4, 2) == [(R.g(-3), 4, 1), (R.v - 1, 3, 2)]


def test_equal_factors_vanish():
    assert straighten([2, 2], 2, 3).is_zero()
    assert straighten([0], 1, 2).is_zero()


def test_wedge_example():
    got = wedge_example()
    assert got == wedge_expected()
    assert got != wedge_printed()


def test_straighten_sorted_word():
    assert straighten([3, 1], 2, 2) == FockVector.basis(2, (1,), 2)
    assert straighten([4, 2], 2, 2) == FockVector.basis(2, (2, 1), 2)
    assert straighten([], 0, 3) == FockVector.vacuum(3)


@pytest.mark.parametrize("n", [2, 3])
def test_rewriting_order_does_not_matter(n):
    rng = random.Random(7)
    for _ in range(25):
        word = [rng.randint(-2, 6) for _ in range(rng.randint(2, 4))]
        m = len(word)
        fast = straighten(word, m, n)
        assert straighten_naive(word, m, n, "leftmost") == fast
        assert straighten_naive(word, m, n, "rightmost") == fast


def test_J_kills_vacuum():
    for n in (2, 3):
        for k in (1, 2):
            assert J_apply(k, FockVector.vacuum(n)).is_zero()
            assert J_apply(k, FockVector.vacuum(n, 4)).is_zero()


def test_J_lowers_degree():
    for lam in partitions_of(4):
        out = J_apply(1, FockVector.basis(2, lam))
        assert all(sum(mu) == 2 for mu in out.terms)


def _commutator_scalar(k, n):
    R = Ring(n)
    return k * sum((R.vpow(j * abs(k)) for j in range(n)), R.zero)


@pytest.mark.parametrize("n", [2, 3])
def test_heisenberg_commutator(n):
    for lam in [(), (1,), (2, 1), (1, 1, 1)]:
        x = FockVector.basis(n, lam)
        for k in (1, 2):
            for l in (1, 2):
                lhs = J_apply(k, J_neg_apply(l, x)) - J_neg_apply(l, J_apply(k, x))
                want = x.scale(_commutator_scalar(k, n)) if k == l else FockVector(n, 0)
                assert lhs == want


def test_inner_product_orthonormal():
    a = FockVector.basis(3, (2, 1))
    b = FockVector.basis(3, (3,))
    assert inner_product(a, a) == Ring(3).one
    assert inner_product(a, b).is_zero()


def test_J_adjoint():
    # <lam| J_{-k} mu> = <J_k lam | mu>
    for n in (2, 3):
        for k in (1, 2):
            for mu in partitions_of(2):
                ket = J_neg_apply(k, FockVector.basis(n, mu))
                for lam in partitions_of(2 + n * k):
                    left = inner_product(FockVector.basis(n, lam), ket)
                    right = inner_product(J_apply(k, FockVector.basis(n, lam)), FockVector.basis(n, mu))
                    assert left == right
            for mu in partitions_of(4):
                bra = J_bra_apply(k, mu, 0, n)
                for lam in partitions_of(4 - n * k):
                    x = FockVector.basis(n, lam)
                    assert inner_product(bra, x) == inner_product(FockVector.basis(n, mu), J_neg_apply(k, x))


def test_rho_star_without_z():
    x = FockVector.basis(2, (1,))
    assert rho_star(5, 0, x) == wedge_onto(5, x)
