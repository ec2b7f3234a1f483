import pytest

from oracles import schur

from icefock.coeff_ring import Ring, flip_q, llt_g_spec
from icefock.fock import FockVector
from icefock.heisenberg import (
    cauchy_llt_sides,
    cauchy_metaplectic_sides,
    e_in_p,
    h_in_p,
    llt,
    metaplectic_sf,
    metaplectic_via_combinatorial_super_llt,
    psi_apply,
    strip_operator,
    super_llt,
    verify_commutation,
)
from icefock.partitions import contains, partitions_of, partitions_up_to


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [1, 2])
def test_h_and_e_act_by_strips(n, k):
    spec = llt_g_spec(n)
    for lam in partitions_of(2 * n):
        x = FockVector.basis(n, lam)
        h = psi_apply(h_in_p(k), x).map_coeffs(lambda c: c.specialize_g(spec))
        e = psi_apply(e_in_p(k), x).map_coeffs(lambda c: c.specialize_g(spec))
        assert h == strip_operator(k, x, "horizontal")
        assert e == strip_operator(k, x, "vertical")


def test_domino_examples():
    R = Ring(2, 1)
    assert llt((2,), (), 1, 2) == R.z(1)
    assert llt((1, 1), (), 1, 2) == R.q * R.z(1)
    assert llt((1, 1), (), 1, 2, method="operator") == R.q * R.z(1)
    assert llt((1, 1), (), 1, 2, method="operator", g_spec="default") == -R.q * R.z(1)


@pytest.mark.parametrize("r", [1, 2])
def test_n1_is_schur(r):
    for lam in partitions_up_to(4):
        for mu in partitions_up_to(sum(lam)):
            if contains(lam, mu):
                want = schur(lam, mu, r)
                assert llt(lam, mu, r, 1) == want
                assert llt(lam, mu, r, 1, method="operator", g_spec="default") == want


@pytest.mark.parametrize("n", [2, 3])
def test_operator_and_combinatorial_agree(n):
    for lam in partitions_up_to(6):
        for mu in partitions_up_to(sum(lam)):
            if not contains(lam, mu):
                continue
            comb = llt(lam, mu, 2, n)
            assert llt(lam, mu, 2, n, method="operator") == comb
            assert llt(lam, mu, 2, n, method="operator", g_spec="default") == flip_q(comb)


def test_super_llt_agree():
    for lam in partitions_up_to(4):
        for mu in partitions_up_to(sum(lam)):
            if contains(lam, mu):
                assert super_llt(lam, mu, 1, 2) == super_llt(lam, mu, 1, 2, method="operator")


def test_metaplectic_three_ways():
    n, r = 2, 2
    for lam in partitions_up_to(5):
        for mu in partitions_up_to(sum(lam)):
            if not contains(lam, mu):
                continue
            a = metaplectic_sf(lam, mu, r, n)
            assert a == metaplectic_sf(lam, mu, r, n, "operator") == metaplectic_sf(lam, mu, r, n, "super_llt")
            comb = metaplectic_via_combinatorial_super_llt(lam, mu, r, n)
            assert a.specialize_g(llt_g_spec(n)) == comb
            assert a.specialize_g() == flip_q(comb)


def test_metaplectic_single_row():
    R = Ring(2, 1)
    assert metaplectic_sf((2,), (), 1, 2).specialize_g() == (1 - R.v) * R.z(1) ** 2


@pytest.mark.parametrize("n", [2, 3])
def test_cauchy_small(n):
    lhs, rhs = cauchy_llt_sides(n, (), 4)
    assert lhs == rhs
    lhs, rhs = cauchy_metaplectic_sides(n, 4)
    assert lhs == rhs


@pytest.mark.parametrize("kind", ["gamma-delta", "diamond", "locality_U"])
def test_commutation_small(kind):
    assert verify_commutation(kind, 2, 4, 2)["status"] == "pass"
