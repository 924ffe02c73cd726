import pytest

from vff import ALPHA, GAMMA, FockVector, monomial, phi, q_background, vacuum
from vff.partitions import enumerate_level
from vff.scalars import central_charge, conformal_weight, kac_alpha, reflect
from vff.sugawara import (
    apply_L,
    apply_word,
    closed_form_L,
    commutator_defect,
    descendant,
    hermiticity_defect,
    highest_weight_check,
    lowering_word,
)

Q = q_background()


def test_level_one_and_two_descendants():
    assert descendant(ALPHA, (1,)) == phi(1).scale(ALPHA)
    assert descendant(ALPHA, (2,)) == phi(2).scale(2 * (Q + ALPHA)) - monomial((1, 1))
    assert descendant(ALPHA, (1, 1)) == phi(2).scale(2 * ALPHA) + monomial((1, 1), ALPHA**2)


def test_combination_cancels_at_kac_points():
    combo = descendant(ALPHA, (2,)).scale(ALPHA**2) + descendant(ALPHA, (1, 1))
    expected = 2 * ALPHA * (ALPHA - kac_alpha(1, 2)) * (ALPHA - kac_alpha(2, 1))
    assert combo == phi(2).scale(expected)


def test_descendant_vanishes_at_zero():
    assert descendant(0, (1,)).is_zero()


def test_word_order():
    assert lowering_word((2, 1)) == (-1, -2)
    direct = apply_L(-1, ALPHA, apply_L(-2, ALPHA, vacuum()))
    assert descendant(ALPHA, (2, 1)) == direct
    assert apply_word((-1, -2), ALPHA, vacuum()) == direct


def test_l0_eigenvalue():
    for k in enumerate_level(4):
        v = monomial(k)
        assert apply_L(0, ALPHA, v) == v.scale(conformal_weight(ALPHA) + 4)


@pytest.mark.parametrize("n", range(-5, 6))
def test_matches_closed_form(n):
    for level in range(0, 5):
        for k in enumerate_level(level):
            v = monomial(k)
            assert apply_L(n, ALPHA, v) == closed_form_L(n, ALPHA, v)


@pytest.mark.parametrize("n,m", [(1, -1), (2, -2), (3, -3), (2, -1), (-2, 1), (1, 2), (-1, -2), (4, -4)])
def test_virasoro_relations(n, m):
    for level in range(0, 4):
        for k in enumerate_level(level):
            assert commutator_defect(n, m, ALPHA, monomial(k)).is_zero()


def test_central_term_visible():
    # dropping the central term leaves exactly c/12 (n^3 - n) on the vacuum
    v = vacuum()
    lhs = apply_L(2, ALPHA, apply_L(-2, ALPHA, v)) - apply_L(-2, ALPHA, apply_L(2, ALPHA, v))
    assert lhs == apply_L(0, ALPHA, v).scale(4) + v.scale(central_charge() / 2)


@pytest.mark.parametrize("n", [-2, -1, 1, 2])
def test_hermiticity(n):
    for lu in range(0, 4):
        for u in enumerate_level(lu):
            lv = lu - n
            if lv < 0:
                continue
            for v in enumerate_level(lv):
                assert hermiticity_defect(n, ALPHA, monomial(u), monomial(v)).is_zero()


def test_hermiticity_needs_reflection():
    # pairing against L_{-n} at alpha itself (not 2Q - alpha) fails
    from vff.fock import gaussian_pairing

    u, v = phi(1), vacuum()
    wrong = gaussian_pairing(apply_L(1, ALPHA, u), v) - gaussian_pairing(u, apply_L(-1, ALPHA, v))
    assert not wrong.is_zero()


def test_highest_weight():
    assert highest_weight_check(ALPHA, 6)
    assert highest_weight_check(kac_alpha(2, 3), 3)
    with pytest.raises(ValueError):
        highest_weight_check(ALPHA, 0)


def test_rational_alpha():
    v = descendant(reflect(kac_alpha(2, 1)), (1, 1))
    assert v.levels() == {2}
    assert not v.is_zero()
    assert descendant(GAMMA, ()) == vacuum()
    assert apply_L(3, ALPHA, FockVector()).is_zero()
