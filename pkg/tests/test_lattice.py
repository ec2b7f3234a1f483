from itertools import product

import pytest

from icefock.coeff_ring import Ring
from icefock.lattice import (
    DELTA,
    GAMMA,
    FiniteSystem,
    brute_partition_function,
    delta_row_element,
    finite_partition_function,
    gamma_row_element,
    hat_transfer_element,
    multi_row_element,
    vertex_weight,
)
from icefock.partitions import partitions_up_to


def test_delta_weights():
    R = Ring(3, 1)
    z = R.z(1)
    # (left, top, right, bottom)
    assert vertex_weight(DELTA, ("+", 0), "+", ("+", 0), "+", z) == R.one
    assert vertex_weight(DELTA, ("+", 0), "-", ("+", 0), "-", z) == R.one
    assert vertex_weight(DELTA, ("+", 0), "-", ("-", 1), "+", z) == R.one
    assert vertex_weight(DELTA, ("-", 1), "-", ("-", 2), "-", z) == R.g(1) * z
    assert vertex_weight(DELTA, ("-", 2), "+", ("-", 0), "+", z) == z
    assert vertex_weight(DELTA, ("-", 0), "+", ("+", 0), "-", z) == (1 - R.v) * z
    assert vertex_weight(DELTA, ("-", 1), "+", ("+", 0), "-", z).is_zero()
    assert vertex_weight(DELTA, ("+", 1), "+", ("+", 0), "+", z).is_zero()


def test_gamma_weights():
    R = Ring(3, 1)
    z = R.z(1)
    zi = z.inverse_monomial()
    assert vertex_weight(GAMMA, ("-", 0), "+", ("-", 0), "+", z) == R.one
    assert vertex_weight(GAMMA, ("-", 0), "+", ("+", 0), "-", z) == 1 - R.v
    assert vertex_weight(GAMMA, ("+", 2), "+", ("+", 1), "+", z) == zi
    assert vertex_weight(GAMMA, ("+", 2), "-", ("+", 1), "-", z) == zi * R.g(1)
    assert vertex_weight(GAMMA, ("+", 1), "-", ("-", 0), "+", z) == zi
    assert vertex_weight(GAMMA, ("+", 2), "-", ("-", 0), "+", z).is_zero()


def test_vacuum_elements():
    for n in (1, 2, 3):
        z = Ring(n, 1).z(1)
        assert delta_row_element(z, (), ()) == Ring(n, 1).one
        assert gamma_row_element(z, (), ()) == Ring(n, 1).one


def test_n1_rows():
    R = Ring(1, 1)
    z = R.z(1)
    assert delta_row_element(z, (3,), ()) == (1 - R.v) * z ** 3
    assert delta_row_element(z, (3,), (1,)) == (1 - R.v) * z ** 2
    assert delta_row_element(z, (3,), (3,)) == R.one
    assert delta_row_element(z, (1, 1), ()) == -R.v * (1 - R.v) * z ** 2


def test_gamma_adjoint():
    for n in (2, 3):
        z = Ring(n, 1).z(1)
        for lam in partitions_up_to(3):
            for mu in partitions_up_to(4):
                assert gamma_row_element(z, lam, mu) == gamma_row_element(z, lam, mu, method="adjoint")


def test_rows_commute():
    for n in (2, 3):
        R = Ring(n, 2)
        z1, z2 = R.z(1), R.z(2)
        for lam in partitions_up_to(4):
            for mu in partitions_up_to(2):
                assert multi_row_element([z1, z2], lam, mu) == multi_row_element([z2, z1], lam, mu)


def _systems(flavor, n, r, N):
    R = Ring(n, r)
    zs = [R.z(i + 1) for i in range(r)]
    for top in product("+-", repeat=N):
        for bottom in product("+-", repeat=N):
            for charges in product(range(n), repeat=r):
                if flavor == DELTA:
                    left, right = [("+", 0)] * r, [("-", c) for c in charges]
                else:
                    left, right = [("+", c) for c in charges], [("-", 0)] * r
                yield FiniteSystem(flavor, zs, top, bottom, left, right)


@pytest.mark.parametrize("flavor", [DELTA, GAMMA])
@pytest.mark.parametrize("n,r,N", [(1, 2, 3), (2, 1, 4), (2, 2, 3), (3, 2, 2)])
def test_dynamic_programming_matches_brute_force(flavor, n, r, N):
    nonzero = 0
    for s in _systems(flavor, n, r, N):
        a = finite_partition_function(s)
        assert a == brute_partition_function(s)
        nonzero += not a.is_zero()
    assert nonzero > 0


def test_hat_window_shape():
    z = Ring(2, 1).z(1)
    w, right = hat_transfer_element(4, 2, "+++", "+++", z)
    assert w == Ring(2, 1).one and right == ("+", 0)
    with pytest.raises(ValueError):
        hat_transfer_element(4, 2, "++", "+++", z)
