from functools import lru_cache

import pytest

from vff import ALPHA, GAMMA, ONE, ZERO, Partition, Scalar
from vff.errors import FactorizationMismatch, InvalidGamma, InvalidIndex, SingularDualMatrix
from vff.linalg import ScalarMatrix, det, nullspace, rank, solve
from vff.partitions import enumerate_level, partition_count
from vff.scalars import central_charge, conformal_weight, kac_alpha, q_background, reflect
from vff.structure import (
    KacMinus,
    KacPlus,
    NotKac,
    Verdict,
    annihilated_up_to,
    classify,
    descendant_matrix,
    irreducibility_check,
    kac_determinant_check,
    kac_factors,
    kac_product,
    kernel_basis,
    operator_matrix,
    projection_matrix,
    shapovalov_matrix,
    singular_vector,
)
from vff.sugawara import descendant

Q = q_background()
DELTA = conformal_weight(ALPHA)
C = central_charge()


# -- abstract Verma module oracle ---------------------------------------------------
# Vectors are dicts word -> coefficient, a word (m_1, ..., m_k) standing for
# L_{m_1} ... L_{m_k} v with every m_i < 0.  Only the relations of the algebra
# and L_n v = 0 (n > 0), L_0 v = Delta v are used.


@lru_cache(maxsize=None)
def _act(n, word):
    if n < 0:
        return {(n,) + word: ONE}
    if not word:
        return {(): DELTA} if n == 0 else {}
    m, rest = word[0], word[1:]
    out = {}

    def add(d, c):
        for w, x in d.items():
            out[w] = out.get(w, ZERO) + c * x

    for w, x in _act(n, rest).items():
        add(_act(m, w), x)
    if n - m:
        add(_act(n + m, rest), Scalar.coerce(n - m))
    if n == -m:
        add({rest: ONE}, C * (n**3 - n) / 12)
    return {w: x for w, x in out.items() if not x.is_zero()}


def verma_gram(n):
    labels = enumerate_level(n)
    rows = []
    for nu in labels:
        state = {tuple(-p for p in reversed(nu)): ONE}
        row = []
        for nup in labels:
            vec = state
            for mode in reversed(nup):
                nxt = {}
                for w, x in vec.items():
                    for w2, y in _act(mode, w).items():
                        nxt[w2] = nxt.get(w2, ZERO) + x * y
                vec = nxt
            row.append(vec.get((), ZERO))
        rows.append(row)
    return rows


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_shapovalov_matches_verma_oracle(n):
    assert shapovalov_matrix(n).entries == verma_gram(n)


def test_shapovalov_small_levels():
    assert shapovalov_matrix(1).entries == [[2 * DELTA]]
    s2 = shapovalov_matrix(2)
    assert s2.entries == [[4 * DELTA + C / 2, 6 * DELTA], [6 * DELTA, 8 * DELTA**2 + 4 * DELTA]]
    d12 = conformal_weight(kac_alpha(1, 2))
    d21 = conformal_weight(kac_alpha(2, 1))
    assert s2.det() == 32 * DELTA * (DELTA - d12) * (DELTA - d21)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_shapovalov_symmetric_and_reflection_invariant(n):
    s = shapovalov_matrix(n)
    assert s.is_symmetric()
    assert shapovalov_matrix(n, reflect(ALPHA)) == s


def test_kac_ratios():
    assert kac_determinant_check(1) == 2
    assert kac_determinant_check(2) == 32
    assert not kac_determinant_check(3).depends_on_alpha()


def test_kac_factor_conventions():
    assert kac_factors(2) == [(1, 1, 1), (1, 2, 1), (2, 1, 1)]
    assert kac_factors(2, "zero") == [(1, 1, 1)]
    with pytest.raises(FactorizationMismatch):
        kac_determinant_check(2, "zero")
    assert kac_product(1) == DELTA


def test_descendant_matrix_examples():
    assert descendant_matrix(1).entries == [[ALPHA]]
    m2 = descendant_matrix(2)
    assert m2.row_index == [(2,), (1, 1)]
    assert m2.entries == [[2 * (Q + ALPHA), -ONE], [2 * ALPHA, ALPHA**2]]
    assert m2.det() == 2 * ALPHA**3 + 2 * ALPHA**2 * Q + 2 * ALPHA


def test_pi_basis_matrix():
    m = descendant_matrix(2, basis="pi")
    # phi2 = pi_(2) / (-2i), phi1^2 = pi_(1,1) / (-1)
    assert m.entry((1, 1), (1, 1)) == -(ALPHA**2)
    with pytest.raises(ValueError):
        descendant_matrix(2, basis="x")


def test_projection_level_one():
    p = projection_matrix(1)
    assert p.entries == [[ALPHA / (2 * Q - ALPHA)]]
    assert projection_matrix(1, at_kac=(1, 1)).entries == [[ZERO]]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projection_defining_property(n):
    p = projection_matrix(n)
    dual = descendant_matrix(n, reflect(ALPHA))
    assert dual @ p == descendant_matrix(n)


def test_projection_determinant_quotient():
    p = projection_matrix(2)
    assert p.det() == descendant_matrix(2).det() / descendant_matrix(2, reflect(ALPHA)).det()


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("mode", [1, 2])
def test_projection_intertwines_lowering(n, mode):
    # Phi^{N+n} after L_{-n} at 2Q - alpha equals L_{-n} at alpha after Phi^N
    low_dual = operator_matrix(-mode, n, reflect(ALPHA))
    low_here = operator_matrix(-mode, n, ALPHA)
    assert low_dual @ projection_matrix(n + mode) == projection_matrix(n) @ low_here


def test_projection_singular_dual():
    with pytest.raises(SingularDualMatrix):
        projection_matrix(1, reflect(ZERO))


@pytest.mark.parametrize("r,s", [(1, 1), (2, 1), (1, 2), (1, 3), (3, 1), (2, 2), (1, 4), (4, 1)])
def test_kernel_dimensions(r, s):
    for n in range(1, r * s + 3):
        assert len(kernel_basis(r, s, n)) == partition_count(n - r * s)
        if n <= 4:
            assert projection_matrix(n, at_kac=(r, s)).rank() == partition_count(n) - partition_count(n - r * s)


def test_kernel_examples():
    assert kernel_basis(1, 1, 1) == [[ONE]]
    assert kernel_basis(2, 1, 1) == []
    assert len(kernel_basis(1, 2, 3)) == 1
    with pytest.raises(InvalidIndex):
        kernel_basis(0, 1, 1)


@pytest.mark.parametrize("r,s", [(1, 1), (2, 1), (1, 2), (1, 3), (3, 1), (2, 2), (1, 4), (4, 1)])
def test_frenkel_dichotomy(r, s):
    for n in range(1, r * s + 1):
        assert descendant_matrix(n, reflect(kac_alpha(r, s))).rank() == partition_count(n)
    assert descendant_matrix(r * s, kac_alpha(r, s)).rank() == partition_count(r * s) - 1


def test_singular_vector_examples():
    sv = singular_vector(2, 1)
    assert sv.sigma == {Partition((2,)): GAMMA**2 / 4, Partition((1, 1)): ONE}
    assert sv.realized_at_kac.is_zero()
    sv = singular_vector(1, 2)
    assert sv.sigma[Partition((2,))] == 4 / GAMMA**2
    assert not sv.realized_at_dual.is_zero()
    sv = singular_vector(1, 1)
    assert sv.sigma == {Partition((1,)): ONE}
    assert descendant(0, (1,)).is_zero()


@pytest.mark.parametrize("r,s", [(1, 3), (3, 1), (2, 2), (1, 4), (2, 3)])
def test_singular_vector_annihilated(r, s):
    sv = singular_vector(r, s)
    assert annihilated_up_to(sv.realized_at_dual, reflect(kac_alpha(r, s)), r * s)
    assert sv.realized_at_dual.levels() == {r * s}


@pytest.mark.parametrize("r,s,n", [(2, 1, 2), (1, 1, 1), (1, 2, 4), (2, 2, 5), (3, 1, 3)])
def test_irreducibility(r, s, n):
    assert irreducibility_check(r, s, n)


def test_reducible_at_dual_weight():
    # the Verma side does carry a singular vector; a direct check finds it
    a = reflect(kac_alpha(2, 1))
    sv = singular_vector(2, 1)
    assert annihilated_up_to(sv.realized_at_dual, a, 2)


def test_classify():
    assert classify(NotKac()) is Verdict.VERMA
    assert classify(KacMinus(3, 2)) is Verdict.IRREDUCIBLE_QUOTIENT
    assert classify(KacPlus(1, 1)) is Verdict.IRREDUCIBLE_QUOTIENT
    assert classify(KacPlus(1, 1), "symbolic") is Verdict.IRREDUCIBLE_QUOTIENT
    # gamma = 1: gamma/2 + 2/gamma = 5/2 = 5 * gamma/2
    assert classify(KacPlus(1, 1), 1) is Verdict.ZERO
    # gamma^2 = 2 is irrational, but gamma = 3/2 gives 3/4 + 4/3 = 25/12, neither 3k/4 nor 4k/3
    assert classify(KacPlus(1, 1), "3/2") is Verdict.IRREDUCIBLE_QUOTIENT
    with pytest.raises(InvalidGamma):
        classify(NotKac(), 2)
    with pytest.raises(InvalidGamma):
        classify(NotKac(), "abc")


def test_linalg_helpers():
    a = [[GAMMA, ONE], [ONE, ALPHA]]
    assert det(a) == GAMMA * ALPHA - 1
    assert rank([[ONE, GAMMA], [2 * ONE, 2 * GAMMA]]) == 1
    assert nullspace([[ONE, GAMMA]]) == [[-GAMMA, ONE]]
    x = solve(a, [[ONE], [ZERO]])
    assert [[sum((a[i][k] * x[k][0] for k in range(2)), ZERO)] for i in range(2)] == [[ONE], [ZERO]]
    assert solve([[ONE, ONE], [ONE, ONE]], [[ONE], [ONE]]) is None
    m = ScalarMatrix([(1,)], [(1,)], [[GAMMA]])
    assert m.transpose() == m and m.is_symmetric()
    with pytest.raises(ValueError):
        ScalarMatrix([(1,)], [(1,)], [[GAMMA, GAMMA]])
