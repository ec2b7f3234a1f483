from fractions import Fraction

import pytest

from icefock.coeff_ring import (
    Ring,
    RingElem,
    SeriesCap,
    StructureError,
    default_g_spec,
    flip_q,
    gauss_normal_form,
    llt_g_spec,
    power_sum,
    validate_g_spec,
)


def test_gauss_pair_reduces_to_v():
    for n in (2, 3, 4, 5):
        R = Ring(n)
        for a in range(1, n):
            assert R.G(a) * R.G(n - a) == R.v


def test_identity():
    R = Ring(3, 2)
    x = R.z(1) * R.G(1) + R.q
    assert x * R.one == x
    assert x + R.zero == x


def test_normal_form_examples():
    assert gauss_normal_form((2, 1), 3) == ((1, 0), 2)
    assert gauss_normal_form((0, 0), 3) == ((0, 0), 0)
    assert gauss_normal_form((3,), 2) == ((1,), 2)


def test_g_zero_is_minus_v():
    R = Ring(3)
    assert R.g(0) == -R.v
    assert R.g(3) == -R.v
    assert R.g(-1) == R.G(2)


def test_involution():
    R = Ring(3, 1)
    assert R.G(1).involute() == R.G(2)
    x = R.monomial(1, q=3, z=[1])
    assert x.involute() == x
    assert (R.G(1) * R.G(1)).involute() == R.G(2) * R.G(2)
    y = R.G(1) * R.z(1) + 5 * R.G(2)
    assert y.involute().involute() == y


def test_default_specialization():
    R = Ring(2, 1)
    assert (R.G(1) * R.z(1)).specialize_g() == -R.q * R.z(1)
    x = R.q * R.z(1) + 3
    assert x.specialize_g() == x
    for n in (2, 3, 4):
        spec = default_g_spec(n)
        for a in range(1, n):
            assert spec[a] * spec[n - a] == Ring(n).v
        validate_g_spec(spec, n)
        validate_g_spec(llt_g_spec(n), n)


def test_bad_g_spec_rejected():
    R = Ring(3)
    with pytest.raises(ValueError):
        validate_g_spec({1: R.q, 2: R.v}, 3)
    with pytest.raises(ValueError):
        validate_g_spec({0: R.one, 1: R.q, 2: R.q}, 3)


def test_power_sums():
    R2 = Ring(1, 2)
    assert power_sum(1, 2) == R2.z(1) + R2.z(2)
    assert power_sum(2, 1) == Ring(1, 1).z(1, 2)
    assert power_sum(3, 2) == R2.z(1, 3) + R2.z(2, 3)


def test_arity_mismatch():
    with pytest.raises(StructureError):
        Ring(2, 1).z(1) + Ring(2, 2).z(1)
    with pytest.raises(StructureError):
        Ring(2, 1).one * Ring(3, 1).one


def test_inverse_monomial():
    R = Ring(3, 2)
    x = R.monomial(Fraction(2, 3), q=1, z=[2, -1], g=[1, 0])
    assert x * x.inverse_monomial() == R.one
    assert x ** -2 * x ** 2 == R.one
    with pytest.raises(ZeroDivisionError):
        (R.one + R.z(1)).inverse_monomial()


def test_json_round_trip():
    R = Ring(3, 2)
    x = R.G(1) * R.z(1, 2) - Fraction(1, 2) * R.q * R.z(2) + R.G(2)
    assert RingElem.from_json(x.to_json()) == x
    assert x.to_json() == RingElem.from_json(x.to_json()).to_json()


def test_truncate_and_flip():
    R = Ring(2, 2)
    x = R.one + R.z(1) * R.z(2) + R.z(1, 3)
    assert x.truncate(SeriesCap(2)) == R.one + R.z(1) * R.z(2)
    assert flip_q(R.q * R.z(1) + R.v) == -R.q * R.z(1) + R.v
