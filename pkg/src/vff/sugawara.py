"""Feigin-Fuchs (Sugawara) Virasoro generators acting on the Fock space.

    L_n = i(alpha - (n+1)Q) A_n + sum_{m not in {0, n}} A_{n-m} A_m     (n != 0)
    L_0 = Delta_alpha + 2 sum_{m >= 1} A_{-m} A_m

Every generator is affine in alpha except through Delta_alpha in L_0, so the
action on a monomial splits as ``alpha * X + Y``; the alpha-free pieces are
computed once per (n, monomial) by literally composing Heisenberg modes and
then cached.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .fock import FockVector, _Accumulator, _heisenberg, gaussian_pairing, vacuum
from .partitions import Partition
from .scalars import I, ONE, Scalar, central_charge, conformal_weight, q_background, reflect

__all__ = [
    "apply_L",
    "apply_word",
    "closed_form_L",
    "descendant",
    "lowering_word",
    "commutator_defect",
    "hermiticity_defect",
    "highest_weight_check",
]

_Q = q_background()


def _sugawara_sum(n: int, k: Partition, window: int) -> FockVector:
    v = FockVector._raw({k: ONE})
    total = FockVector()
    if n == 0:
        for m in range(1, window + 1):
            w = _heisenberg(m, v)
            if w:
                total = total + _heisenberg(-m, w).scale(2)
        return total
    for m in range(-window, window + 1):
        if m == 0 or m == n:
            continue
        w = _heisenberg(m, v)
        if w:
            total = total + _heisenberg(n - m, w)
    return total


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _split(n: int, k: Partition):
    """(X, Y) with L_n^alpha phi^k = alpha X + Y (+ Delta_alpha phi^k when n = 0)."""
    window = k.level + abs(n) + 1
    rest = _sugawara_sum(n, k, window)
    wider = _sugawara_sum(n, k, 2 * window)
    if rest != wider:  # pragma: no cover - would indicate a kernel bug
        raise AssertionError(f"Sugawara sum for L_{n} on {k} not stable under window growth")
    if n == 0:
        return FockVector(), rest
    an = _heisenberg(n, FockVector._raw({k: ONE}))
    x = an.scale(I)
    y = an.scale(-I * (n + 1) * _Q) + rest
    return x, y


def _split_cached(n, k):
    with _lock:
        return _split(n, k)


def apply_L(n: int, alpha, v: FockVector) -> FockVector:
    """L_n^{0,alpha} v, evaluated through the Heisenberg modes."""
    alpha = Scalar.coerce(alpha)
    acc = _Accumulator()
    for k, c in v._terms.items():
        x, y = _split_cached(n, k)
        ca = c * alpha
        for kk, cc in x._terms.items():
            acc.add(kk, ca * cc)
        for kk, cc in y._terms.items():
            acc.add(kk, c * cc)
    out = acc.vector()
    if n == 0:
        out = out + v.scale(conformal_weight(alpha))
    return out


def apply_word(modes, alpha, v: FockVector) -> FockVector:
    """Apply ``L_{modes[0]} ... L_{modes[-1]}``; the last mode acts first."""
    for n in reversed(tuple(modes)):
        v = apply_L(n, alpha, v)
        if not v:
            break
    return v


def lowering_word(nu) -> tuple[int, ...]:
    """Mode sequence of L_{-nu} = L_{-nu_l} ... L_{-nu_1} (L_{-nu_1} acts first)."""
    return tuple(-p for p in reversed(tuple(nu)))


# -- independent closed form ----------------------------------------------------


def closed_form_L(n: int, alpha, v: FockVector) -> FockVector:
    """Hand-expanded differential-operator form of L_n on holomorphic polynomials.

    n >= 1:  -(alpha-(n+1)Q)/2 d_n - 1/4 sum_{m=1}^{n-1} d_m d_{n-m} + sum_k k phi_k d_{n+k}
    n = -p:  p(alpha+(p-1)Q) phi_p - sum_{k=1}^{p-1} k(p-k) phi_k phi_{p-k} + sum_j (p+j) phi_{p+j} d_j
    n = 0:   Delta_alpha + sum_m m phi_m d_m
    """
    alpha = Scalar.coerce(alpha)
    acc = _Accumulator()
    if n == 0:
        delta = conformal_weight(alpha)
        for k, c in v._terms.items():
            acc.add(k, c * (delta + k.level))
        return acc.vector()
    if n > 0:
        lin = -(alpha - (n + 1) * _Q) / 2
        for k, c in v._terms.items():
            kn = k.count(n)
            if kn:
                acc.add(k.without_part(n), c * lin * kn)
            for m in range(1, n):
                km = k.count(m)
                if not km:
                    continue
                k1 = k.without_part(m)
                kr = k1.count(n - m)
                if kr:
                    acc.add(k1.without_part(n - m), c * (-km * kr) / 4)
            for part in set(k):
                if part > n:
                    kk = part - n
                    cnt = k.count(part)
                    acc.add(k.without_part(part).with_part(kk), c * (kk * cnt))
        return acc.vector()
    p = -n
    lin = p * (alpha + (p - 1) * _Q)
    for k, c in v._terms.items():
        acc.add(k.with_part(p), c * lin)
        for j in range(1, p):
            acc.add(k.with_part(j).with_part(p - j), c * (-j * (p - j)))
        for part in set(k):
            cnt = k.count(part)
            acc.add(k.without_part(part).with_part(part + p), c * ((p + part) * cnt))
    return acc.vector()


# -- descendants ---------------------------------------------------------------


@lru_cache(maxsize=4096)
def _descendant(alpha: Scalar, nu: Partition) -> FockVector:
    if not nu:
        return vacuum()
    # nu[:-1] is again a partition; L_{-nu_l} is the last factor applied
    return apply_L(-nu[-1], alpha, _descendant(alpha, Partition(nu[:-1])))


_dlock = threading.Lock()


def descendant(alpha, nu) -> FockVector:
    """Q_{alpha,nu} = L_{-nu_l} ... L_{-nu_1} 1."""
    alpha = Scalar.coerce(alpha)
    nu = Partition(nu)
    with _dlock:
        return _descendant(alpha, nu)


# -- algebra checks -------------------------------------------------------------


def commutator_defect(n: int, m: int, alpha, v: FockVector) -> FockVector:
    """([L_n, L_m] - (n-m) L_{n+m} - c/12 (n^3-n) delta_{n,-m}) v; identically zero."""
    lhs = apply_L(n, alpha, apply_L(m, alpha, v)) - apply_L(m, alpha, apply_L(n, alpha, v))
    rhs = apply_L(n + m, alpha, v).scale(n - m)
    if n == -m:
        rhs = rhs + v.scale(central_charge() * (n**3 - n) / 12)
    return lhs - rhs


def hermiticity_defect(n: int, alpha, u: FockVector, v: FockVector) -> Scalar:
    """<L_n^alpha u, v> - <u, L_{-n}^{2Q-alpha} v> with alpha formally real."""
    alpha = Scalar.coerce(alpha)
    return gaussian_pairing(apply_L(n, alpha, u), v) - gaussian_pairing(u, apply_L(-n, reflect(alpha), v))


def highest_weight_check(alpha, n_max: int) -> bool:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    one = vacuum()
    if any(apply_L(n, alpha, one) for n in range(1, n_max + 1)):
        return False
    return apply_L(0, alpha, one) == one.scale(conformal_weight(alpha))
