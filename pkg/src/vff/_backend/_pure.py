"""Pure-Python kernel on sympy's sparse polynomial rings."""

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

NAME = "python"

_ring, GAMMA, ALPHA = ring("g,a", ZZ, grlex)
ZERO = _ring.zero
ONE = _ring.one


def const(n):
    return _ring(int(n))


def from_terms(terms):
    return _ring.from_dict({tuple(m): ZZ(int(c)) for m, c in terms.items() if c})


def terms(p):
    return [(m, int(c)) for m, c in p.terms()]


def gcd(p, q):
    g = p.gcd(q)
    if g and g.LC < 0:
        g = -g
    return g


def exquo(p, q):
    return p.exquo(q)


def lc(p):
    return int(p.LC)


def content(p):
    return abs(int(p.content()))


def is_zero(p):
    return not p


def degrees(p):
    if not p:
        return (0, 0)
    return tuple(max(0, int(d)) for d in p.degrees())
