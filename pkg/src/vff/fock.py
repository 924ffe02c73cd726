"""The graded Fock space F = C[phi_1, phi_2, ...] and the Heisenberg modes A_n.

Monomials ``phi^k`` are keyed by :class:`~vff.partitions.Partition`: the
partition with ``k_n`` parts equal to ``n``.  Only holomorphic polynomials are
modelled, so the anti-holomorphic derivative in ``A_{-n}`` acts as zero and
``A_{-n}`` reduces to multiplication by ``-i n phi_n``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import Partition, enumerate_level
from .scalars import I, ONE, ZERO, Scalar

__all__ = [
    "FockVector",
    "vacuum",
    "monomial",
    "phi",
    "apply_A",
    "pi_basis",
    "to_pi_coordinates",
    "from_pi_coordinates",
    "gaussian_pairing",
    "monomial_weight",
    "grade",
]

_HALF_I = I / 2


class FockVector:
    """Finite linear combination of monomials with :class:`Scalar` coefficients.

    Treated as an immutable value; operations return new vectors.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                c = Scalar.coerce(c)
                if not c.is_zero():
                    clean[k if isinstance(k, Partition) else Partition(k)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms):
        v = cls.__new__(cls)
        v._terms = terms
        return v

    # -- access -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in deterministic (graded) order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, k) -> Scalar:
        if isinstance(k, dict):
            from .partitions import from_multiplicities

            k = from_multiplicities(k)
        return self._terms.get(Partition(k), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def levels(self) -> set[int]:
        return {k.level for k in self._terms}

    def top_level(self) -> int:
        return max((k.level for k in self._terms), default=0)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def coordinates(self, basis) -> list[Scalar]:
        return [self._terms.get(k, ZERO) for k in basis]

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return FockVector._raw(out)

    def __neg__(self):
        return FockVector._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "FockVector":
        c = Scalar.coerce(c)
        if c.is_zero():
            return FockVector()
        if c == ONE:
            return self
        return FockVector._raw({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c):
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_coefficients(self, fn) -> "FockVector":
        return FockVector({k: fn(c) for k, c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "FockVector(0)"
        return f"FockVector({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{_mono_str(k)}" for k, c in self.items())


def _mono_str(k) -> str:
    if not k:
        return "1"
    parts = []
    for n, kn in sorted(Partition(k).multiplicities().items()):
        parts.append(f"phi{n}" if kn == 1 else f"phi{n}^{kn}")
    return "*".join(parts)


class _Accumulator(dict):
    """Mutable term map used by the operator kernels."""

    def add(self, k, c):
        s = self.get(k)
        if s is None:
            if not c.is_zero():
                self[k] = c
        else:
            s = s + c
            if s.is_zero():
                del self[k]
            else:
                self[k] = s

    def vector(self) -> FockVector:
        return FockVector._raw(dict(self))


def vacuum() -> FockVector:
    return FockVector._raw({Partition(): ONE})


def monomial(k, coeff=1) -> FockVector:
    return FockVector({Partition(k): coeff})


def phi(n: int) -> FockVector:
    return monomial((n,))


def _heisenberg(n: int, v: FockVector) -> FockVector:
    """A_n for n != 0 on holomorphic polynomials."""
    acc = _Accumulator()
    if n > 0:
        for k, c in v._terms.items():
            kn = k.count(n)
            if kn:
                acc.add(k.without_part(n), c * (_HALF_I * kn))
    else:
        m = -n
        f = I * (-m)
        for k, c in v._terms.items():
            acc.add(k.with_part(m), c * f)
    return acc.vector()


def apply_A(n: int, v: FockVector, alpha=None) -> FockVector:
    """Heisenberg mode A_n; the zero mode is multiplication by (i/2) alpha."""
    if n == 0:
        if alpha is None:
            raise ValueError("A_0 needs alpha")
        return v.scale(_HALF_I * Scalar.coerce(alpha))
    return _heisenberg(n, v)


def _pi_factor(k) -> Scalar:
    # pi_k = (-i)^len(k) * prod(n^{k_n}) * phi^k
    prod = 1
    for n in k:
        prod *= n
    return (-I) ** len(k) * prod


def pi_basis(k) -> FockVector:
    """pi_k = A_{-k} 1 expressed in the monomial basis."""
    k = Partition(k)
    return FockVector._raw({k: _pi_factor(k)})


def to_pi_coordinates(v: FockVector) -> dict:
    """Coefficients of ``v`` in the pi basis, keyed by partition."""
    return {k: c / _pi_factor(k) for k, c in v._terms.items()}


def from_pi_coordinates(coords) -> FockVector:
    return FockVector({Partition(k): Scalar.coerce(c) * _pi_factor(k) for k, c in dict(coords).items()})


def monomial_weight(k) -> Fraction:
    """E|phi^k|^2 = prod_n k_n! (2n)^{-k_n} for independent N_C(0, 1/2n) modes."""
    w = Fraction(1)
    for n, kn in Partition(k).multiplicities().items():
        w *= Fraction(factorial(kn), (2 * n) ** kn)
    return w


def gaussian_pairing(u: FockVector, v: FockVector) -> Scalar:
    """Sesquilinear form <u, v>, antilinear in ``u``; monomials are orthogonal."""
    total = ZERO
    small, big = (u, v) if len(u) <= len(v) else (v, u)
    for k in small._terms:
        b = big._terms.get(k)
        if b is None:
            continue
        total = total + u._terms[k].conjugate() * v._terms[k] * monomial_weight(k)
    return total


def grade(v: FockVector) -> dict[int, FockVector]:
    out: dict[int, dict] = {}
    for k, c in v._terms.items():
        out.setdefault(k.level, {})[k] = c
    return {n: FockVector._raw(t) for n, t in sorted(out.items())}


def level_basis(n: int) -> list[Partition]:
    return enumerate_level(n)
