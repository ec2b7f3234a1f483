import pytest

from oracles import schur

from icefock.coeff_ring import Ring
from icefock.lattice import DELTA, GAMMA, brute_partition_function
from icefock.whittaker import (
    c_constant,
    decomposition_sides,
    finite_system,
    frobenius,
    gamma_delta_sum_factor,
    sigma_vectors,
    star,
    star_shifted,
    tail_constant_from,
    whittaker_Z,
)


def test_star():
    assert star((2, 1), (1,), 2) == (3, 2, 1)
    assert star_shifted((2, 1), (1,), 2) == (4, 3, 1)
    assert star((), (), 3) == (2, 2, 2)
    with pytest.raises(ValueError):
        star((1, 1, 1), (), 2)
    with pytest.raises(ValueError):
        star((), (2,), 2)


def test_frobenius():
    assert frobenius((3, 2, 1)) == ((2, 0), (2, 0))
    assert frobenius((4, 3, 1)) == ((3, 1), (2, 0))
    assert frobenius(()) == ((), ())


@pytest.mark.parametrize("flavor", [DELTA, GAMMA])
def test_finite_system_brute_force(flavor):
    for lam in [(), (1,), (2, 1)]:
        for s in sigma_vectors(2, 2):
            sysm = finite_system(lam, s, flavor, 2, 2)
            assert whittaker_Z(lam, s, flavor, 2, 2) == brute_partition_function(sysm)


def test_n1_factorization():
    # one charge class: Z = (z_2 - v z_1) s_lambda(z_1, z_2)
    R = Ring(1, 2)
    for lam in [(), (1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
        assert whittaker_Z(lam, (0, 0), DELTA, 1, 2) == (R.z(2) - R.v * R.z(1)) * schur(lam, (), 2)


def test_delta_gamma_sums():
    n, r = 2, 2
    R = Ring(n, r)
    for lam in [(), (1,), (2,), (2, 1)]:
        sd = sum((whittaker_Z(lam, s, DELTA, n, r) for s in sigma_vectors(n, r)), R.zero)
        sg = sum((whittaker_Z(lam, s, GAMMA, n, r) for s in sigma_vectors(n, r)), R.zero)
        assert sd == gamma_delta_sum_factor(lam, n, r) * sg


@pytest.mark.parametrize("xi", [(), (1,)])
def test_decomposition(xi):
    consts = {s: c_constant(xi, s, 2, 2) for s in sigma_vectors(2, 2)}
    for lam in [(), (1,), (1, 1), (2, 1), (3,)]:
        lhs, rhs = decomposition_sides(lam, xi, 2, 2, constants=consts)
        assert lhs == rhs
        for s, c in consts.items():
            assert tail_constant_from(lam, xi, s, 2, 2) == c


def test_unshifted_star_breaks_decomposition():
    lhs, rhs = decomposition_sides((), (), 2, 2, shifted=False)
    assert lhs != rhs
