"""Exact arithmetic in Q(i)(gamma, alpha).

A :class:`Scalar` is stored as ``(re_num + i*im_num) / den`` with all three
parts in Z[gamma, alpha].  The triple is kept reduced (no common polynomial
factor, no common integer content) with ``den`` having a positive leading
coefficient in graded-lex order, so two scalars are equal iff their triples
are equal.  The real and imaginary parts are exposed separately as reduced
fractions over Q[gamma, alpha].

The polynomial work is delegated to :mod:`vff._backend`.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm as _lcm
from numbers import Rational

from ._backend import kernel as _k
from .errors import DivisionByZero, InvalidIndex, PoleAtPoint

__all__ = [
    "Scalar",
    "GAMMA",
    "ALPHA",
    "I",
    "ONE",
    "ZERO",
    "field_arith",
    "q_background",
    "central_charge",
    "conformal_weight",
    "kac_alpha",
    "reflect",
    "conjugate",
    "evaluate",
]

_ZERO = _k.ZERO
_ONE = _k.ONE


def _is_one(p):
    return p == _ONE


def _reduce(nr, ni, d):
    if _k.is_zero(d):
        raise DivisionByZero("zero denominator")
    if _k.is_zero(nr) and _k.is_zero(ni):
        return _ZERO, _ZERO, _ONE
    if not _is_one(d):
        g = _k.gcd(nr, d)
        if not _k.is_zero(ni) and not _is_one(g):
            g = _k.gcd(g, ni)
        if not _is_one(g):
            nr = _k.exquo(nr, g)
            ni = _k.exquo(ni, g) if not _k.is_zero(ni) else ni
            d = _k.exquo(d, g)
    if _k.lc(d) < 0:
        nr, ni, d = -nr, -ni, -d
    return nr, ni, d


def _poly_key(p):
    return tuple(_k.terms(p))


class Scalar:
    """Element of Q(i)(gamma, alpha) in canonical form."""

    __slots__ = ("_re", "_im", "_den", "_hash")

    def __init__(self, re=_ZERO, im=_ZERO, den=_ONE, *, reduced=False):
        if not reduced:
            re, im, den = _reduce(re, im, den)
        self._re = re
        self._im = im
        self._den = den
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return cls(_k.const(x), reduced=True) if x else ZERO
        if isinstance(x, Rational):
            x = Fraction(x)
            return cls(_k.const(x.numerator), _ZERO, _k.const(x.denominator), reduced=True)
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact; build from I")
        if isinstance(x, str):
            return cls.coerce(Fraction(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    @classmethod
    def from_terms(cls, re_num, re_den=None, im_num=None, im_den=None) -> "Scalar":
        """Build from ``{(a, b): Fraction}`` maps (exponents of gamma, alpha)."""
        re = _frac_from_terms(re_num, re_den or {(0, 0): 1})
        if not im_num:
            return re
        return re + I * _frac_from_terms(im_num, im_den or {(0, 0): 1})

    # -- parts --------------------------------------------------------------

    @property
    def parts(self):
        """The raw canonical triple ``(re_num, im_num, den)`` of backend polynomials."""
        return self._re, self._im, self._den

    def real(self) -> "Scalar":
        return Scalar(self._re, _ZERO, self._den)

    def imag(self) -> "Scalar":
        return Scalar(self._im, _ZERO, self._den)

    def real_fraction(self):
        """Real part as a reduced ``(num, den)`` pair of ``{(a, b): Fraction}`` maps."""
        return _split_fraction(self._re, self._den)

    def imag_fraction(self):
        return _split_fraction(self._im, self._den)

    def conjugate(self) -> "Scalar":
        if _k.is_zero(self._im):
            return self
        return Scalar(self._re, -self._im, self._den, reduced=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return _k.is_zero(self._re) and _k.is_zero(self._im)

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return _k.is_zero(self._im)

    def is_polynomial(self) -> bool:
        return _k.degrees(self._den) == (0, 0)

    def is_constant(self) -> bool:
        return all(_k.degrees(p) == (0, 0) for p in self.parts)

    def degrees(self):
        """Max (gamma, alpha) degrees over numerators and denominator."""
        ds = [_k.degrees(p) for p in self.parts if not _k.is_zero(p)]
        return (max(d[0] for d in ds), max(d[1] for d in ds))

    def alpha_degree(self) -> int:
        return self.degrees()[1]

    def depends_on_alpha(self) -> bool:
        return self.alpha_degree() > 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        d1, d2 = self._den, o._den
        if d1 == d2:
            return Scalar(self._re + o._re, self._im + o._im, d1)
        g = _k.gcd(d1, d2)
        if _is_one(g):
            a, b = d2, d1
        else:
            a, b = _k.exquo(d2, g), _k.exquo(d1, g)
        return Scalar(self._re * a + o._re * b, self._im * a + o._im * b, d1 * a)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self._re, -self._im, self._den, reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return ZERO
        r1, i1, d1 = self.parts
        r2, i2, d2 = o.parts
        if _k.is_zero(i1) and _k.is_zero(i2):
            return Scalar(r1 * r2, _ZERO, d1 * d2)
        return Scalar(r1 * r2 - i1 * i2, r1 * i2 + i1 * r2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        r, i, d = self.parts
        if _k.is_zero(i):
            return Scalar(d, _ZERO, r)
        return Scalar(d * r, -(d * i), r * r + i * i)

    def __truediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self._den == other._den and self._re == other._re and self._im == other._im

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(_poly_key(p) for p in self.parts))
        return self._hash

    # -- substitution / evaluation -----------------------------------------

    def subs(self, gamma=None, alpha=None) -> "Scalar":
        """Substitute scalars for gamma and/or alpha."""
        g = GAMMA if gamma is None else Scalar.coerce(gamma)
        a = ALPHA if alpha is None else Scalar.coerce(alpha)
        cache = ({}, {})
        r, i, d = (_eval_poly_scalar(p, g, a, cache) for p in self.parts)
        return (r + I * i) / d

    def evaluate(self, gamma, alpha=0):
        """Exact value at rational (gamma, alpha) as ``(re, im)`` Fractions."""
        g, a = Fraction(gamma), Fraction(alpha)
        d = _eval_poly(self._den, g, a)
        if d == 0:
            raise PoleAtPoint(f"denominator vanishes at gamma={g}, alpha={a}")
        return _eval_poly(self._re, g, a) / d, _eval_poly(self._im, g, a) / d

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        re = _fmt_fraction(self._re, self._den)
        if _k.is_zero(self._im):
            return re
        im = _fmt_fraction(self._im, self._den)
        if _k.is_zero(self._re):
            return f"i*{im}"
        return f"{re} + i*{im}"


# -- helpers -------------------------------------------------------------------


def _frac_from_terms(num, den):
    nums = {tuple(m): Fraction(c) for m, c in dict(num).items() if Fraction(c)}
    dens = {tuple(m): Fraction(c) for m, c in dict(den).items() if Fraction(c)}
    if not dens:
        raise DivisionByZero("empty denominator")
    if not nums:
        return ZERO
    lcm = _lcm(*(c.denominator for c in list(nums.values()) + list(dens.values())))
    pn = _k.from_terms({m: int(c * lcm) for m, c in nums.items()})
    pd = _k.from_terms({m: int(c * lcm) for m, c in dens.items()})
    return Scalar(pn, _ZERO, pd)


def _split_fraction(num, den):
    """Reduce num/den over Q[gamma, alpha]; den primitive with positive lc."""
    if _k.is_zero(num):
        return {}, {(0, 0): Fraction(1)}
    g = _k.gcd(num, den)
    if not _is_one(g):
        num, den = _k.exquo(num, g), _k.exquo(den, g)
    c = _k.content(den)
    if _k.lc(den) < 0:
        c = -c
    return (
        {m: Fraction(v, c) for m, v in _k.terms(num)},
        {m: Fraction(v, c) for m, v in _k.terms(den)},
    )


def _eval_poly(p, g, a):
    total = Fraction(0)
    for (i, j), c in _k.terms(p):
        total += c * g**i * a**j
    return total


def _eval_poly_scalar(p, g, a, cache):
    gp, ap = cache
    total = ZERO
    for (i, j), c in _k.terms(p):
        if i not in gp:
            gp[i] = g**i
        if j not in ap:
            ap[j] = a**j
        total = total + gp[i] * ap[j] * c
    return total


def _fmt_poly(p):
    if _k.is_zero(p):
        return "0"
    out = []
    for (i, j), c in _k.terms(p):
        mon = []
        if i:
            mon.append("g" if i == 1 else f"g^{i}")
        if j:
            mon.append("a" if j == 1 else f"a^{j}")
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = "*".join(([str(c)] if c != 1 or not mon else []) + mon)
        out.append((sign, body))
    s = "".join(f" {sg} {b}" for sg, b in out).strip()
    if s.startswith("+ "):
        s = s[2:]
    elif s.startswith("- "):
        s = "-" + s[2:]
    return s


def _fmt_fraction(num, den):
    if _k.is_zero(num):
        return "0"
    g = _k.gcd(num, den)
    if not _is_one(g):
        num, den = _k.exquo(num, g), _k.exquo(den, g)
    if _k.lc(den) < 0:
        num, den = -num, -den
    ns = _fmt_poly(num)
    if den == _ONE:
        return ns
    if len(_k.terms(num)) > 1:
        ns = f"({ns})"
    ds = _fmt_poly(den)
    if len(_k.terms(den)) > 1 or "*" in ds:
        ds = f"({ds})"
    return f"{ns}/{ds}"


# -- constants -----------------------------------------------------------------

ZERO = Scalar(_ZERO, _ZERO, _ONE, reduced=True)
ONE = Scalar(_ONE, _ZERO, _ONE, reduced=True)
I = Scalar(_ZERO, _ONE, _ONE, reduced=True)
GAMMA = Scalar(_k.GAMMA, _ZERO, _ONE, reduced=True)
ALPHA = Scalar(_k.ALPHA, _ZERO, _ONE, reduced=True)


# -- named operations ----------------------------------------------------------

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a, b, op: str) -> Scalar:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}; expected one of {sorted(_OPS)}") from None
    return fn(Scalar.coerce(a), Scalar.coerce(b))


_Q = GAMMA / 2 + 2 / GAMMA


def q_background() -> Scalar:
    """Q = gamma/2 + 2/gamma."""
    return _Q


_C = 1 + 6 * _Q * _Q


def central_charge() -> Scalar:
    """c_L = 1 + 6 Q^2."""
    return _C


def conformal_weight(a) -> Scalar:
    """Delta_a = a/2 (Q - a/2)."""
    a = Scalar.coerce(a)
    return a / 2 * (_Q - a / 2)


def kac_alpha(r, s) -> Scalar:
    """alpha_{r,s} = (1-r) gamma/2 + (1-s) 2/gamma; ``s`` may be rational."""
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise InvalidIndex(f"r must be a positive integer, got {r!r}")
    try:
        s = Fraction(s)
    except (TypeError, ValueError):
        raise InvalidIndex(f"s must be rational, got {s!r}") from None
    if s <= 0:
        raise InvalidIndex(f"s must be positive, got {s}")
    return (1 - r) * GAMMA / 2 + (1 - s) * 2 / GAMMA


def reflect(a) -> Scalar:
    """alpha -> 2Q - alpha."""
    return 2 * _Q - Scalar.coerce(a)


def conjugate(a) -> Scalar:
    """i -> -i with gamma and alpha treated as real."""
    return Scalar.coerce(a).conjugate()


def evaluate(a, gamma, alpha=0):
    return Scalar.coerce(a).evaluate(gamma, alpha)
