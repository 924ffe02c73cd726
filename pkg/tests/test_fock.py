from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vff import ALPHA, I, FockVector, Partition, monomial, phi, vacuum
from vff.fock import (
    _heisenberg,
    apply_A,
    from_pi_coordinates,
    gaussian_pairing,
    grade,
    monomial_weight,
    pi_basis,
    to_pi_coordinates,
)
from vff.partitions import enumerate_level


def test_vector_space_ops():
    v = phi(1).scale(ALPHA) + monomial((1, 1), 2)
    assert v - v == FockVector()
    assert (v + v) == v.scale(2)
    assert v.coefficient({1: 2}) == 2
    assert v.levels() == {1, 2}
    assert v.top_level() == 2
    assert str(phi(2)) == "(1)*phi2"


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("m", range(-3, 4))
def test_heisenberg_commutator(n, m):
    # [A_n, A_m] = (n/2) delta_{n,-m} on holomorphic polynomials, m != 0
    if m == 0:
        return
    for k in enumerate_level(3):
        v = monomial(k)
        lhs = _heisenberg(n, _heisenberg(m, v)) - _heisenberg(m, _heisenberg(n, v))
        rhs = v.scale(Fraction(n, 2)) if n == -m else FockVector()
        assert lhs == rhs


def test_zero_mode():
    assert apply_A(0, vacuum(), ALPHA) == vacuum().scale(I * ALPHA / 2)
    with pytest.raises(ValueError):
        apply_A(0, vacuum())


def test_pi_basis():
    assert pi_basis((1,)) == phi(1).scale(-I)
    assert pi_basis((2, 1)) == monomial((2, 1), -2)
    # pi_k is A_{-k} applied to the vacuum
    assert pi_basis((2, 1)) == _heisenberg(-1, _heisenberg(-2, vacuum()))
    v = phi(2).scale(ALPHA) + monomial((1, 1), 3)
    assert from_pi_coordinates(to_pi_coordinates(v)) == v


def test_monomial_weight():
    assert monomial_weight(()) == 1
    assert monomial_weight((1,)) == Fraction(1, 2)
    assert monomial_weight((1, 1)) == Fraction(2, 4)
    assert monomial_weight((2, 1)) == Fraction(1, 8)


def test_pairing_is_sesquilinear():
    u = phi(1).scale(I + ALPHA)
    v = phi(1).scale(2)
    assert gaussian_pairing(u, v) == (ALPHA - I) * 2 * Fraction(1, 2)
    assert gaussian_pairing(u, v) == gaussian_pairing(v, u).conjugate()
    assert gaussian_pairing(phi(1), phi(2)) == 0


@given(st.integers(1, 4), st.sampled_from(enumerate_level(3) + enumerate_level(4)))
def test_creation_adjoint_to_annihilation(n, k):
    # A_{-n} is the adjoint of A_n for the Gaussian pairing
    u = monomial(k)
    v = monomial(Partition(k).with_part(n))
    lhs = gaussian_pairing(_heisenberg(-n, u), v)
    rhs = gaussian_pairing(u, _heisenberg(n, v))
    assert lhs == rhs
    assert not lhs.is_zero()


def test_grade():
    v = vacuum() + phi(2) + monomial((1, 1))
    g = grade(v)
    assert list(g) == [0, 2]
    assert g[2] == phi(2) + monomial((1, 1))
