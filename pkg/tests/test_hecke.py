import pytest

from icefock.coeff_ring import Ring
from icefock.fock import pair_rule
from icefock.hecke import (
    TensorVector,
    TwistParameters,
    antisymmetrize,
    basis_vectors,
    hecke_T_direct,
    hecke_T_rmatrix,
    T_word,
    u_label,
    y_apply,
    yang_baxter_holds,
)

TWISTS = [TwistParameters.untwisted, TwistParameters.formal, TwistParameters.gauss]


def test_u_label():
    assert u_label(1, 3) == (1, 0)
    assert u_label(3, 3) == (3, 0)
    assert u_label(0, 3) == (3, 1)
    assert u_label(5, 3) == (2, -1)


def test_twist_must_be_inverse_pairs():
    R = Ring(2, 0)
    with pytest.raises(ValueError):
        TwistParameters(2, R, {(1, 2): R.q, (2, 1): R.q})


@pytest.mark.parametrize("make", TWISTS)
def test_two_actions_agree_and_quadratic(make):
    A = make(2)
    v = A.ring.v
    for x in basis_vectors(2, 2, A.ring):
        a = hecke_T_direct(1, x, A)
        assert a == hecke_T_rmatrix(1, x, A)
        assert hecke_T_rmatrix(1, a, A) == a.scale(v - 1) + x.scale(v)
        assert hecke_T_rmatrix(1, y_apply(1, a), A) == y_apply(2, x).scale(v)


@pytest.mark.parametrize("make", TWISTS)
def test_braid(make):
    A = make(2)
    for x in basis_vectors(2, 3, A.ring, (0, 1)):
        assert T_word((1, 2, 1), x, A) == T_word((2, 1, 2), x, A)


@pytest.mark.parametrize("n", [2, 3])
def test_yang_baxter(n):
    for make in TWISTS:
        assert yang_baxter_holds(make(n))


def test_literal_display_disagrees():
    A = TwistParameters.gauss(2)
    bad = sum(
        hecke_T_direct(1, x, A) != hecke_T_rmatrix(1, x, A, literal_display=True)
        for x in basis_vectors(2, 2, A.ring)
    )
    assert bad == 18


def test_symmetrizer_eigenvalue():
    A = TwistParameters.gauss(2)
    for x in basis_vectors(2, 3, A.ring, (0, 1)):
        y = antisymmetrize(x, A)
        for i in (1, 2):
            assert hecke_T_rmatrix(i, y, A) == y.scale(A.ring.v)


@pytest.mark.parametrize("n", [2, 3])
def test_wedge_relations_killed(n):
    A = TwistParameters.gauss(n)
    R = A.ring
    for l in range(-3, 4):
        for m in range(l + 1, 4):
            x = TensorVector.from_u(n, (l, m), R)
            for c, a, b in pair_rule(l, m, n):
                x = x - TensorVector.from_u(n, (a, b), R).scale(c)
            assert antisymmetrize(x, A).is_zero()
