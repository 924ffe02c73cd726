"""Module structure at fixed level: descendant and Shapovalov matrices, the Kac
determinant, the canonical projection, its kernel and the singular vectors.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    FactorizationMismatch,
    InvalidGamma,
    InvalidIndex,
    NonUniqueSolution,
    NoSolution,
    SingularDualMatrix,
)
from .fock import FockVector, _pi_factor
from .linalg import ScalarMatrix
from .partitions import Partition, enumerate_level, partition_count
from .scalars import ALPHA, ONE, Scalar, conformal_weight, kac_alpha, reflect
from .sugawara import apply_L, apply_word, descendant

__all__ = [
    "descendant_matrix",
    "shapovalov_matrix",
    "kac_factors",
    "kac_product",
    "kac_determinant_check",
    "projection_matrix",
    "operator_matrix",
    "kernel_basis",
    "SingularVectorResult",
    "singular_vector",
    "annihilated_up_to",
    "irreducibility_check",
    "NotKac",
    "KacMinus",
    "KacPlus",
    "Verdict",
    "classify",
]


def _check_pair(r, s):
    for name, x in (("r", r), ("s", s)):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise InvalidIndex(f"{name} must be a positive integer, got {x!r}")


def descendant_matrix(n: int, alpha=ALPHA, basis: str = "phi") -> ScalarMatrix:
    """Row nu = coordinates of Q_{alpha,nu} in the level-n phi (or pi) basis."""
    if n < 1:
        raise ValueError("level must be >= 1")
    if basis not in ("phi", "pi"):
        raise ValueError("basis must be 'phi' or 'pi'")
    alpha = Scalar.coerce(alpha)
    labels = enumerate_level(n)
    rows = []
    for nu in labels:
        coords = descendant(alpha, nu).coordinates(labels)
        if basis == "pi":
            coords = [c / _pi_factor(k) for c, k in zip(coords, labels)]
        rows.append(coords)
    return ScalarMatrix(labels, list(labels), rows)


def shapovalov_matrix(n: int, alpha=ALPHA) -> ScalarMatrix:
    """S_n(nu, nu') = vacuum coefficient of L_{nu'_1} ... L_{nu'_l} Q_{alpha,nu}."""
    if n < 1:
        raise ValueError("level must be >= 1")
    alpha = Scalar.coerce(alpha)
    labels = enumerate_level(n)
    empty = Partition()
    rows = []
    for nu in labels:
        q = descendant(alpha, nu)
        rows.append([apply_word(tuple(nup), alpha, q).coefficient(empty) for nup in labels])
    return ScalarMatrix(labels, list(labels), rows)


def kac_factors(n: int, p0: str = "one") -> list[tuple[int, int, int]]:
    """(r, s, p(n - rs)) for all 1 <= rs <= n with a non-zero exponent."""
    out = []
    for r in range(1, n + 1):
        for s in range(1, n // r + 1):
            e = partition_count(n - r * s, p0)
            if e:
                out.append((r, s, e))
    return out


def kac_product(n: int, alpha=ALPHA, p0: str = "one") -> Scalar:
    delta = conformal_weight(alpha)
    prod = ONE
    for r, s, e in kac_factors(n, p0):
        prod = prod * (delta - conformal_weight(kac_alpha(r, s))) ** e
    return prod


def kac_determinant_check(n: int, p0: str = "one") -> Scalar:
    """det S_n divided by the Kac product; must be a non-zero alpha-free constant."""
    ratio = shapovalov_matrix(n).det() / kac_product(n, p0=p0)
    if ratio.is_zero() or ratio.depends_on_alpha():
        raise FactorizationMismatch(f"level {n}: det S / Kac product = {ratio}")
    return ratio


def projection_matrix(n: int, alpha=ALPHA, at_kac=None) -> ScalarMatrix:
    """Matrix of Phi_alpha^{0,n} in the phi basis (row convention).

    Entry (k, k') is the coefficient of phi^{k'} in Phi(phi^k), so a row
    vector ``y`` of phi-coordinates maps to ``y @ P``.  With ``at_kac=(r, s)``
    the matrix is formed for symbolic alpha first and then specialised to
    alpha_{r,s}.
    """
    if at_kac is not None:
        r, s = at_kac
        _check_pair(r, s)
        sym = projection_matrix(n, ALPHA)
        try:
            return sym.subs(alpha=kac_alpha(r, s))
        except ZeroDivisionError as exc:
            raise SingularDualMatrix(f"projection has a pole at alpha_{{{r},{s}}}") from exc
    alpha = Scalar.coerce(alpha)
    dual = descendant_matrix(n, reflect(alpha))
    here = descendant_matrix(n, alpha)
    sol = linalg.solve(dual.entries, here.entries)
    if sol is None:
        raise SingularDualMatrix(f"descendant matrix at 2Q - alpha is singular at level {n}")
    labels = enumerate_level(n)
    return ScalarMatrix(labels, list(labels), sol)


def operator_matrix(mode: int, n: int, alpha=ALPHA) -> ScalarMatrix:
    """L_mode from level n to level n - mode, row convention on phi coordinates."""
    src = enumerate_level(n)
    dst = enumerate_level(n - mode) if n - mode >= 0 else []
    rows = [apply_L(mode, alpha, FockVector({k: ONE})).coordinates(dst) for k in src]
    return ScalarMatrix(src, list(dst), rows)


def kernel_basis(r: int, s: int, n: int) -> list[list[Scalar]]:
    """Basis of ker Phi_{alpha_{r,s}}^{0,n} in nu-coordinates of the dual Verma.

    ``x`` is in the kernel iff sum_nu x_nu Q_{alpha_{r,s}, nu} = 0.
    """
    _check_pair(r, s)
    if n < 1:
        raise ValueError("level must be >= 1")
    return descendant_matrix(n, kac_alpha(r, s)).left_nullspace()


@dataclass
class SingularVectorResult:
    r: int
    s: int
    sigma: dict
    realized_at_dual: FockVector
    realized_at_kac: FockVector

    @property
    def level(self) -> int:
        return self.r * self.s


def _combination(alpha, sigma) -> FockVector:
    total = FockVector()
    for nu, c in sigma.items():
        if not c.is_zero():
            total = total + descendant(alpha, nu).scale(c)
    return total


def singular_vector(r: int, s: int) -> SingularVectorResult:
    """The singular vector at level rs of the Verma module realised at 2Q - alpha_{r,s}."""
    _check_pair(r, s)
    n = r * s
    a_kac = kac_alpha(r, s)
    a_dual = reflect(a_kac)
    labels = enumerate_level(n)
    images = []
    for nu in labels:
        q = descendant(a_dual, nu)
        col = []
        for mode in (1, 2):
            if n - mode >= 0:
                col.extend(apply_L(mode, a_dual, q).coordinates(enumerate_level(n - mode)))
        images.append(col)
    equations = [list(row) for row in zip(*images)]
    null = linalg.nullspace(equations, len(labels)) if equations else [[ONE]]
    if not null:
        raise NoSolution(f"no singular vector at level {n} for (r, s) = ({r}, {s})")
    if len(null) > 1:
        raise NonUniqueSolution(f"{len(null)}-dimensional solution space for ({r}, {s})")
    vec = null[0]
    norm = vec[labels.index(Partition((1,) * n))]
    if norm.is_zero():
        raise NoSolution("sigma_(1,...,1) vanishes; cannot normalise")
    sigma = {nu: c / norm for nu, c in zip(labels, vec)}
    return SingularVectorResult(
        r=r,
        s=s,
        sigma=sigma,
        realized_at_dual=_combination(a_dual, sigma),
        realized_at_kac=_combination(a_kac, sigma),
    )


def annihilated_up_to(v: FockVector, alpha, n_max: int) -> bool:
    return all(apply_L(m, alpha, v).is_zero() for m in range(1, n_max + 1))


def irreducibility_check(r: int, s: int, n: int) -> bool:
    """No non-zero vector of span{Q_{alpha_{r,s},nu} : |nu| = n} is killed by L_1 and L_2."""
    _check_pair(r, s)
    if n < 1:
        raise ValueError("level must be >= 1")
    a = kac_alpha(r, s)
    red, pivots = linalg.rref(descendant_matrix(n, a).entries)
    labels = enumerate_level(n)
    basis = [FockVector(dict(zip(labels, row))) for row in red[: len(pivots)]]
    if not basis:
        return True
    columns = []
    for v in basis:
        col = []
        for mode in (1, 2):
            if n - mode >= 0:
                col.extend(apply_L(mode, a, v).coordinates(enumerate_level(n - mode)))
        columns.append(col)
    equations = [list(row) for row in zip(*columns)]
    if not equations:
        return False
    return not linalg.nullspace(equations, len(basis))


# -- classification ---------------------------------------------------------------


@dataclass(frozen=True)
class NotKac:
    pass


@dataclass(frozen=True)
class KacMinus:
    r: int
    s: int


@dataclass(frozen=True)
class KacPlus:
    r: int
    s: int


class Verdict(str, enum.Enum):
    VERMA = "Verma"
    IRREDUCIBLE_QUOTIENT = "IrreducibleQuotient"
    ZERO = "Zero"


def _in_zero_set(r: int, s: int, gamma) -> bool:
    # 2Q - alpha_{r,s} - Q = r gamma/2 + 2s/gamma; zero set needs it in (gamma/2) N* or (2/gamma) N*
    if gamma is None:
        # as rational functions of gamma: (r-k) gamma/2 + 2s/gamma = 0 or r gamma/2 + 2(s-k)/gamma = 0
        # force s = 0 or r = 0 respectively, impossible for r, s >= 1
        return False
    x = gamma * gamma / 4
    k1 = r + s / x  # shift/(gamma/2)
    k2 = s + r * x  # shift/(2/gamma)
    return any(k.denominator == 1 and k >= 1 for k in (k1, k2))


def classify(point, gamma=None) -> Verdict:
    """Structure of the Liouville module at ``point`` (symbolic gamma when ``gamma`` is None)."""
    if gamma is not None and not (isinstance(gamma, str) and gamma == "symbolic"):
        try:
            gamma = Fraction(gamma)
        except (TypeError, ValueError):
            raise InvalidGamma(f"gamma must be rational, got {gamma!r}") from None
        if not 0 < gamma < 2:
            raise InvalidGamma(f"gamma must lie in (0, 2), got {gamma}")
    else:
        gamma = None
    if isinstance(point, NotKac):
        return Verdict.VERMA
    if isinstance(point, KacMinus):
        _check_pair(point.r, point.s)
        return Verdict.IRREDUCIBLE_QUOTIENT
    if isinstance(point, KacPlus):
        _check_pair(point.r, point.s)
        return Verdict.ZERO if _in_zero_set(point.r, point.s, gamma) else Verdict.IRREDUCIBLE_QUOTIENT
    raise TypeError(f"unknown point {point!r}")
